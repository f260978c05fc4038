// forbconf command line. Talks to the library only through forbconf.h.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forbconf/forbconf.h"

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

struct CliError {
  int code;
  std::string message;
};

int exit_for(fc_status s) { return s == FC_INTERNAL ? kInternal : kUsage; }

void check(fc_status s) {
  if (s == FC_OK) return;
  // Parse errors from the library already end with the grammar.
  throw CliError{exit_for(s), std::string(fc_status_name(s)) + ": " + fc_last_error()};
}

struct MatrixDeleter {
  void operator()(fc_matrix* m) const { fc_matrix_free(m); }
};
struct FamilyDeleter {
  void operator()(fc_family* f) const { fc_family_free(f); }
};
struct ResultDeleter {
  void operator()(fc_search_result* r) const { fc_search_result_free(r); }
};
using MatrixPtr = std::unique_ptr<fc_matrix, MatrixDeleter>;
using FamilyPtr = std::unique_ptr<fc_family, FamilyDeleter>;
using ResultPtr = std::unique_ptr<fc_search_result, ResultDeleter>;

// Takes ownership of a string from the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  fc_string_free(s);
  return out;
}

MatrixPtr matrix_of(const std::string& spec) {
  fc_matrix* m = nullptr;
  check(fc_matrix_from_spec(spec.c_str(), &m));
  return MatrixPtr(m);
}

FamilyPtr family_of(const std::string& spec) {
  fc_family* f = nullptr;
  check(fc_family_parse(spec.c_str(), &f));
  return FamilyPtr(f);
}

struct Range {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// "6" or "4..7".
Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoul(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      r.lo = std::stoul(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument(text);
      const std::string tail = text.substr(dots + 2);
      r.hi = std::stoul(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw CliError{kUsage, "bad range '" + text + "': expected N or LO..HI"};
  }
  if (r.lo > r.hi) throw CliError{kUsage, "bad range '" + text + "': LO exceeds HI"};
  return r;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("FORBCONF_TIME_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw CliError{kUsage, "FORBCONF_TIME_BUDGET must be a number of milliseconds"};
  }
  return 0;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{kUsage, "cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string file_stem(const std::string& family) {
  std::string out;
  for (char c : family) {
    if (std::isalnum(static_cast<unsigned char>(c))) out += c;
    else if (!out.empty() && out.back() != '_') out += '_';
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out.empty() ? "family" : out;
}

// Golden rows keyed by (family spec, m).
struct Golden {
  std::size_t value = 0;
  std::string status;
};

std::map<std::pair<std::string, std::size_t>, Golden> read_goldens(const std::string& path) {
  std::map<std::pair<std::string, std::size_t>, Golden> out;
  std::istringstream in(read_file(path));
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      if (line.rfind("family_spec", 0) == 0) continue;
    }
    // The family spec is quoted when it holds commas.
    std::string family;
    std::size_t pos = 0;
    if (line[0] == '"') {
      const auto close = line.find('"', 1);
      if (close == std::string::npos) throw CliError{kUsage, "bad golden line: " + line};
      family = line.substr(1, close - 1);
      pos = close + 2;
    } else {
      pos = line.find(',');
      family = line.substr(0, pos);
      ++pos;
    }
    std::vector<std::string> fields;
    std::stringstream rest(line.substr(pos));
    for (std::string f; std::getline(rest, f, ',');) fields.push_back(f);
    if (fields.size() < 3) throw CliError{kUsage, "bad golden line: " + line};
    out[{family, std::stoul(fields[0])}] = Golden{std::stoul(fields[1]), fields[2]};
  }
  return out;
}

struct ForbArgs {
  std::string family;
  std::string m = "4";
  std::string format = "csv";
  std::uint64_t budget = 0;
  long min_sum = -1;
  long max_sum = -1;
  std::string witness_dir;
  std::string goldens;
  bool no_symmetry = false;
};

int run_forb(const ForbArgs& a) {
  const Range range = parse_range(a.m);
  if (range.lo == 0) throw CliError{kUsage, "m must be at least 1"};
  auto family = family_of(a.family);
  fc_search_options opts;
  fc_search_options_init(&opts);
  opts.time_budget_ms = a.budget;
  opts.min_sum = a.min_sum;
  opts.max_sum = a.max_sum;
  opts.symmetry_pruning = a.no_symmetry ? 0 : 1;

  std::map<std::pair<std::string, std::size_t>, Golden> goldens;
  if (!a.goldens.empty()) goldens = read_goldens(a.goldens);
  if (!a.witness_dir.empty()) std::filesystem::create_directories(a.witness_dir);

  const bool md = a.format == "md";
  if (md) std::cout << "| m | value | status | witness |\n|---|---|---|---|\n";
  else std::cout << "m,value,status,witness\n";
  int code = kOk;
  for (std::size_t m = range.lo; m <= range.hi; ++m) {
    fc_search_result* raw = nullptr;
    check(fc_forb(m, family.get(), &opts, &raw));
    ResultPtr r(raw);
    const std::size_t value = fc_search_result_value(r.get());
    const std::string status = fc_search_status_name(fc_search_result_status(r.get()));
    std::string witness = "-";
    if (!a.witness_dir.empty()) {
      fc_matrix* w = nullptr;
      check(fc_search_result_witness(r.get(), &w));
      MatrixPtr wp(w);
      char* text = nullptr;
      check(fc_matrix_to_text(wp.get(), &text));
      witness = (std::filesystem::path(a.witness_dir) / (file_stem(a.family) + "_m" + std::to_string(m) + ".mat")).string();
      std::ofstream(witness, std::ios::binary) << take(text);
    }
    if (md) std::cout << "| " << m << " | " << value << " | " << status << " | " << witness << " |\n";
    else std::cout << m << "," << value << "," << status << "," << witness << "\n";

    if (auto it = goldens.find({a.family, m}); it != goldens.end()) {
      const Golden& g = it->second;
      // A timed-out run can only be compared as a lower bound.
      const bool exact = status == "exact", golden_exact = g.status == "exact";
      bool ok = true;
      if (exact && golden_exact) ok = value == g.value;
      else if (exact) ok = value >= g.value;
      else if (golden_exact) ok = value <= g.value;
      if (!ok) {
        std::cerr << "golden mismatch at m=" << m << ": got " << value << " (" << status << "), golden " << g.value
                  << " (" << g.status << ")\n";
        code = kNegative;
      }
    }
  }
  return code;
}

int run_contain(const std::string& f_spec, const std::string& a_spec) {
  auto f = matrix_of(f_spec);
  auto a = matrix_of(a_spec);
  int contained = 0;
  char* cert = nullptr;
  check(fc_contains(f.get(), a.get(), &contained, &cert));
  std::cout << (contained ? "CONTAINED" : "AVOIDED") << "\n" << take(cert);
  return contained ? kOk : kNegative;
}

int run_construct(const std::string& name, std::size_t m, std::size_t k, std::size_t l, bool list) {
  if (list) {
    char* text = nullptr;
    check(fc_construction_list(&text));
    std::cout << take(text);
    return kOk;
  }
  if (name.empty()) throw CliError{kUsage, "construct needs a name or --list"};
  fc_matrix* raw = nullptr;
  check(fc_construct(name.c_str(), m, k, l, &raw));
  MatrixPtr a(raw);
  char* family = nullptr;
  check(fc_construction_family(name.c_str(), k, l, &family));
  char* text = nullptr;
  check(fc_matrix_to_text(a.get(), &text));
  std::cout << "# " << name << " m=" << m << " columns=" << fc_matrix_cols(a.get()) << " avoids " << take(family)
            << "\n"
            << take(text);
  return kOk;
}

struct VerifyArgs {
  std::string claims;
  std::string only;
  std::vector<std::size_t> sizes;
  std::uint64_t budget = 0;
  std::size_t max_m = 0;
  bool details = false;
};

int run_verify(const VerifyArgs& a) {
  fc_verify_options opts;
  fc_verify_options_init(&opts);
  if (!a.sizes.empty()) {
    opts.sizes = a.sizes.data();
    opts.size_count = a.sizes.size();
  }
  if (a.budget) opts.search_budget_ms = a.budget;
  if (a.max_m) opts.max_m = a.max_m;
  opts.with_details = a.details ? 1 : 0;
  std::string text;
  if (!a.claims.empty()) text = read_file(a.claims);
  char* report = nullptr;
  std::size_t failures = 0;
  check(fc_verify(a.claims.empty() ? nullptr : text.c_str(), a.only.empty() ? nullptr : a.only.c_str(), &opts,
                  &report, &failures));
  std::cout << take(report);
  return failures ? kNegative : kOk;
}

// Graph text: K(r,s), K(n), or an edge list such as "0-1 1-2 2-0".
// Returns vertex count and the flattened edges; k is the edge size.
std::pair<std::size_t, std::vector<std::size_t>> parse_graph(const std::string& text, std::size_t k) {
  std::vector<std::size_t> flat;
  std::size_t vertices = 0;
  unsigned r = 0, s = 0;
  char close = 0;
  if (std::sscanf(text.c_str(), "K(%u,%u%c", &r, &s, &close) == 3 && close == ')') {
    if (k != 2) throw CliError{kUsage, "K(r,s) is a graph"};
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = 0; j < s; ++j) flat.insert(flat.end(), {i, r + j});
    return {r + s, flat};
  }
  if (std::sscanf(text.c_str(), "K(%u%c", &r, &close) == 2 && close == ')') {
    if (k != 2) throw CliError{kUsage, "K(n) is a graph"};
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = i + 1; j < r; ++j) flat.insert(flat.end(), {i, j});
    return {r, flat};
  }
  std::istringstream in(text);
  for (std::string edge; in >> edge;) {
    std::stringstream parts(edge);
    std::size_t count = 0;
    for (std::string v; std::getline(parts, v, '-'); ++count) {
      try {
        const std::size_t x = std::stoul(v);
        flat.push_back(x);
        vertices = std::max(vertices, x + 1);
      } catch (const std::logic_error&) {
        throw CliError{kUsage, "bad vertex '" + v + "' in edge " + edge};
      }
    }
    if (count != k) throw CliError{kUsage, "edge " + edge + " does not have " + std::to_string(k) + " vertices"};
  }
  return {vertices, flat};
}

int run_ex(std::size_t m, const std::string& graph, std::size_t k, const std::string& zaran, bool show) {
  std::size_t value = 0;
  char* witness = nullptr;
  if (!zaran.empty()) {
    unsigned r = 0, s = 0;
    if (std::sscanf(zaran.c_str(), "%u,%u", &r, &s) != 2) throw CliError{kUsage, "--zarankiewicz expects r,s"};
    check(fc_zarankiewicz(r, s, &value, show ? &witness : nullptr));
    std::cout << "z(" << r << "," << s << ";2,2) = " << value << "\n";
  } else {
    if (graph.empty()) throw CliError{kUsage, "ex needs --graph or --zarankiewicz"};
    const auto [vertices, flat] = parse_graph(graph, k);
    const std::size_t edges = flat.size() / k;
    if (k == 2) check(fc_ex_graph(m, vertices, flat.data(), edges, &value, show ? &witness : nullptr));
    else check(fc_ex_hypergraph(m, k, vertices, flat.data(), edges, &value, show ? &witness : nullptr));
    std::cout << "ex" << (k == 2 ? "" : "^(" + std::to_string(k) + ")") << "(" << m << ", " << graph << ") = " << value
              << "\n";
  }
  if (show) std::cout << take(witness);
  return kOk;
}

int run_decompose(const std::string& spec, std::optional<std::size_t> row, std::optional<std::size_t> q3,
                  std::size_t low_ones) {
  auto a = matrix_of(spec);
  char* report = nullptr;
  if (row) {
    check(fc_induction_decompose(a.get(), *row, &report));
  } else if (q3) {
    double ratio = 0;
    check(fc_q3_stability(a.get(), *q3, low_ones, &ratio, &report));
  } else {
    throw CliError{kUsage, "decompose needs --row or --q3"};
  }
  std::cout << take(report);
  return kOk;
}

int run_classify(const std::string& spec, std::size_t t) {
  auto a = matrix_of(spec);
  fc_q9_outcome outcome = FC_Q9_UNCLASSIFIED;
  char* report = nullptr;
  check(fc_q9_classify(a.get(), t, &outcome, &report));
  static const char* names[] = {"PARTITION", "CONTAINS Q9", "UNCLASSIFIED"};
  std::cout << names[outcome] << "\n" << take(report);
  return outcome == FC_Q9_PARTITION ? kOk : kNegative;
}

int run_slope(const std::string& family_spec, const std::string& m, std::uint64_t budget) {
  const Range range = parse_range(m);
  auto family = family_of(family_spec);
  fc_search_options opts;
  fc_search_options_init(&opts);
  opts.time_budget_ms = budget;
  char* report = nullptr;
  check(fc_slope(family.get(), range.lo, range.hi, &opts, &report));
  std::cout << take(report);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forbidden configurations: containment, exact forb values, constructions and claim checks"};
  app.require_subcommand(1);
  app.footer(std::string("Matrix and family specs:\n") + fc_spec_grammar());

  std::uint64_t env_budget = 0;
  try {
    env_budget = default_budget();
  } catch (const CliError& e) {
    std::cerr << e.message << "\n";
    return e.code;
  }

  std::function<int()> action;

  auto* contain = app.add_subcommand("contain", "Decide F < A and print a witness");
  std::string f_spec, a_spec;
  contain->add_option("F", f_spec, "configuration")->required();
  contain->add_option("A", a_spec, "host matrix")->required();
  contain->callback([&] { action = [&] { return run_contain(f_spec, a_spec); }; });

  auto* forb = app.add_subcommand("forb", "Exact forb(m, family) by search");
  ForbArgs fa;
  fa.budget = env_budget;
  forb->add_option("--family", fa.family, "comma separated family")->required();
  forb->add_option("--m", fa.m, "m or LO..HI")->capture_default_str();
  forb->add_option("--format", fa.format, "csv or md")->check(CLI::IsMember({"csv", "md"}))->capture_default_str();
  forb->add_option("--budget", fa.budget, "time budget per m in ms (0: none; default from FORBCONF_TIME_BUDGET)");
  forb->add_option("--min-sum", fa.min_sum, "smallest column sum allowed");
  forb->add_option("--max-sum", fa.max_sum, "largest column sum allowed");
  forb->add_option("--witness-dir", fa.witness_dir, "write each extremal matrix to this directory");
  forb->add_option("--goldens", fa.goldens, "CSV of expected values; mismatches exit 1");
  forb->add_flag("--no-symmetry", fa.no_symmetry, "disable the canonical first column");
  forb->callback([&] { action = [&] { return run_forb(fa); }; });

  auto* construct = app.add_subcommand("construct", "Build a named extremal construction");
  std::string c_name;
  std::size_t c_m = 6, c_k = 0, c_l = 0;
  bool c_list = false;
  construct->add_option("name", c_name, "construction name");
  construct->add_option("--m", c_m, "rows")->capture_default_str();
  construct->add_option("--k", c_k, "parameter k");
  construct->add_option("--l", c_l, "parameter l");
  construct->add_flag("--list", c_list, "list constructions");
  construct->callback([&] { action = [&] { return run_construct(c_name, c_m, c_k, c_l, c_list); }; });

  auto* verify = app.add_subcommand("verify", "Check the builtin claims or a claims file");
  VerifyArgs va;
  va.budget = env_budget;
  verify->add_option("--claims", va.claims, "claims file (default: builtin set)");
  verify->add_option("--only", va.only, "claim group")->check(CLI::IsMember({"products", "formulas"}));
  verify->add_option("--sizes", va.sizes, "factor sizes for product claims")->delimiter(',');
  verify->add_option("--budget", va.budget, "search budget per m in ms");
  verify->add_option("--max-m", va.max_m, "largest m tried by formula claims");
  verify->add_flag("--details", va.details, "print witnesses and per-m values");
  verify->callback([&] { action = [&] { return run_verify(va); }; });

  auto* table3 = app.add_subcommand("table3", "Markdown table of pair results with small-m evidence");
  std::string t_m = "3..5";
  std::uint64_t t_budget = env_budget ? env_budget : 5000;
  std::size_t t_factor = 3;
  table3->add_option("--m", t_m, "m range for the searches")->capture_default_str();
  table3->add_option("--budget", t_budget, "search budget per value in ms")->capture_default_str();
  table3->add_option("--factor-size", t_factor, "block size for product constructions")->capture_default_str();
  table3->callback([&] {
    action = [&] {
      const Range r = parse_range(t_m);
      char* md = nullptr;
      check(fc_table3(r.lo, r.hi, t_budget, t_factor, &md));
      std::cout << take(md);
      return static_cast<int>(kOk);
    };
  });

  auto* ex = app.add_subcommand("ex", "Turan numbers by exhaustive search");
  std::size_t e_m = 5, e_k = 2;
  std::string e_graph, e_zaran;
  bool e_show = false;
  ex->add_option("--m", e_m, "host vertices")->capture_default_str();
  ex->add_option("--graph", e_graph, "K(r,s), K(n) or an edge list like \"0-1 1-2\"");
  ex->add_option("--uniform", e_k, "edge size for hypergraphs")->capture_default_str();
  ex->add_option("--zarankiewicz", e_zaran, "r,s: largest C4-free bipartite graph");
  ex->add_flag("--witness", e_show, "print an extremal host");
  ex->callback([&] { action = [&] { return run_ex(e_m, e_graph, e_k, e_zaran, e_show); }; });

  auto* decompose = app.add_subcommand("decompose", "Split a matrix at a row, or layer a Q3(t)-avoiding matrix");
  std::string d_spec;
  std::optional<std::size_t> d_row, d_q3;
  std::size_t d_low = 0;
  decompose->add_option("--matrix", d_spec, "matrix spec")->required();
  decompose->add_option("--row", d_row, "row for the B, C, D split");
  decompose->add_option("--q3", d_q3, "t for the Q3(t) layering");
  decompose->add_option("--low-ones", d_low, "row threshold for the layering (0: 3t-2)");
  decompose->callback([&] { action = [&] { return run_decompose(d_spec, d_row, d_q3, d_low); }; });

  auto* classify = app.add_subcommand("classify", "Type partition of a Q9-avoiding matrix");
  std::string q_spec;
  std::size_t q_t = 2;
  classify->add_option("--matrix", q_spec, "matrix spec")->required();
  classify->add_option("--t", q_t, "column sum")->capture_default_str();
  classify->callback([&] { action = [&] { return run_classify(q_spec, q_t); }; });

  auto* slope = app.add_subcommand("slope", "Log-log slope of forb over an m range");
  std::string s_family, s_m = "4..7";
  std::uint64_t s_budget = env_budget;
  slope->add_option("--family", s_family, "comma separated family")->required();
  slope->add_option("--m", s_m, "LO..HI, at least three values")->capture_default_str();
  slope->add_option("--budget", s_budget, "time budget per m in ms");
  slope->callback([&] { action = [&] { return run_slope(s_family, s_m, s_budget); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
