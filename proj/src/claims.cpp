#include "forbconf/claims.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <cstdio>
#include <map>
#include <sstream>

#include "forbconf/constructions.hpp"
#include "forbconf/containment.hpp"
#include "forbconf/error.hpp"
#include "forbconf/family_spec.hpp"
#include "forbconf/search.hpp"
#include "forbconf/turan.hpp"

namespace forbconf {

namespace {

using Pattern = std::vector<BlockKind>;

constexpr BlockKind kI = BlockKind::identity;
constexpr BlockKind kIc = BlockKind::identity_complement;
constexpr BlockKind kT = BlockKind::triangular;

std::string sizes_text(const std::vector<std::size_t>& sizes) {
  std::string s = "checked at sizes ";
  for (std::size_t i = 0; i < sizes.size(); ++i) s += (i ? "," : "") + std::to_string(sizes[i]);
  return s;
}

std::string pattern_id(const Pattern& p, bool complemented) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += "x";
    s += p[i] == kI ? "I" : p[i] == kIc ? "Ic" : "T";
  }
  return complemented ? "(" + s + ")^c" : s;
}

// Multisets of p blocks, I < Ic < T.
std::vector<Pattern> unordered_patterns(std::size_t p) {
  std::vector<Pattern> out;
  Pattern cur;
  const BlockKind kinds[3] = {kI, kIc, kT};
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < 3; ++i) {
      cur.push_back(kinds[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Pattern> ordered_patterns(std::size_t p) {
  std::vector<Pattern> out(1);
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<Pattern> next;
    for (const auto& q : out)
      for (auto k : {kI, kIc, kT}) {
        next.push_back(q);
        next.back().push_back(k);
      }
    out = std::move(next);
  }
  return out;
}

Pattern pattern_of(const std::string& text) {
  auto p = parse_product_pattern(text);
  if (!p) fail(ErrorCode::internal, "bad builtin pattern " + text);
  return *p;
}

Matrix instantiate(const Pattern& p, std::size_t k, bool complemented) {
  Matrix a = pattern_product(p, k);
  return complemented ? complement(a) : a;
}

ClaimResult avoid_check(const std::string& id, const Matrix& f, const Pattern& p, bool complemented,
                        const VerifyOptions& o) {
  ClaimResult r{id, sizes_text(o.sizes), ClaimStatus::pass, ""};
  for (auto k : o.sizes)
    if (auto cert = contains(f, instantiate(p, k, complemented))) {
      r.status = ClaimStatus::fail;
      r.detail = "contained at size " + std::to_string(k) + "\n" + cert->to_text();
      return r;
    }
  return r;
}

ClaimResult contain_pattern_check(const std::string& id, const Matrix& f, const Pattern& p, bool complemented,
                                  const VerifyOptions& o) {
  ClaimResult r{id, "searched sizes 2.." + std::to_string(o.max_contain_size), ClaimStatus::fail, ""};
  for (std::size_t k = 2; k <= o.max_contain_size; ++k)
    if (auto cert = contains(f, instantiate(p, k, complemented))) {
      r.status = ClaimStatus::pass;
      r.checked = "witnessed at size " + std::to_string(k);
      r.detail = cert->to_text();
      return r;
    }
  r.detail = "no copy found";
  return r;
}

Claim avoid_claim(const std::string& config, const Pattern& p, bool complemented) {
  const std::string id = "avoid:" + config + ":" + pattern_id(p, complemented);
  return {id, "products", [=](const VerifyOptions& o) { return avoid_check(id, parse_spec(config), p, complemented, o); }};
}

Claim contain_pattern_claim(const std::string& config, const Pattern& p, bool complemented) {
  const std::string id = "contain:" + config + ":" + pattern_id(p, complemented);
  return {id, "products",
          [=](const VerifyOptions& o) { return contain_pattern_check(id, parse_spec(config), p, complemented, o); }};
}

Claim contain_spec_claim(const std::string& config, const std::string& target) {
  std::string compact;
  for (char c : target)
    if (c != ' ') compact += c;
  const std::string id = "contain:" + config + ":" + compact;
  return {id, "products", [=](const VerifyOptions&) {
            ClaimResult r{id, "fixed", ClaimStatus::fail, "no copy found"};
            if (auto cert = contains(parse_spec(config), parse_spec(target))) {
              r.status = ClaimStatus::pass;
              r.detail = cert->to_text();
            }
            return r;
          }};
}

Claim equal_claim(const std::string& left, const std::string& right) {
  std::string id = "equal:" + left + "=" + right;
  std::erase(id, ' ');
  return {id, "products", [=](const VerifyOptions&) {
            ClaimResult r{id, "configuration", ClaimStatus::pass, ""};
            if (!(canonicalize(parse_spec(left)) == canonicalize(parse_spec(right)))) {
              r.status = ClaimStatus::fail;
              r.detail = "canonical forms differ";
            }
            return r;
          }};
}

Claim all_products_claim(const std::string& config, std::size_t p) {
  const std::string id = "allprod:" + config + ":" + std::to_string(p) + "fold";
  return {id, "products", [=](const VerifyOptions& o) {
            const Matrix f = parse_spec(config);
            for (const auto& pat : ordered_patterns(p)) {
              auto sub = avoid_check(id, f, pat, false, o);
              if (sub.status != ClaimStatus::pass) {
                sub.detail = pattern_id(pat, false) + " " + sub.detail;
                return sub;
              }
            }
            return ClaimResult{id, sizes_text(o.sizes) + ", " + std::to_string(ordered_patterns(p).size()) + " products",
                               ClaimStatus::pass, ""};
          }};
}

// Avoiders listed for a configuration. When `complete` is set, every other
// product of the same arity must contain it at some size.
struct ProductRow {
  std::string config;
  std::vector<std::string> two;
  std::vector<std::string> three;
  bool complete_two = true;
  bool complete_three = true;
  bool complemented = false;  // products are complements of the listed ones
};

void add_row(std::vector<Claim>& out, const ProductRow& row) {
  for (std::size_t p : {2u, 3u}) {
    const auto& listed = p == 2 ? row.two : row.three;
    const bool complete = p == 2 ? row.complete_two : row.complete_three;
    if (listed.empty() && !complete) continue;
    std::vector<Pattern> avoiders;
    for (const auto& s : listed) avoiders.push_back(s == "all" ? Pattern{} : pattern_of(s));
    const bool all = !listed.empty() && listed.front() == "all";
    for (const auto& pat : unordered_patterns(p)) {
      const bool is_listed = all || std::find(avoiders.begin(), avoiders.end(), pat) != avoiders.end();
      if (is_listed) out.push_back(avoid_claim(row.config, pat, row.complemented));
      else if (complete) out.push_back(contain_pattern_claim(row.config, pat, row.complemented));
    }
  }
}

std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

// forb at each m from m_lo upward until a search runs out of budget or the
// solver's size limit; the formula must hold at the largest exact m. A formula
// stated only for large m that is not yet reached there is inconclusive.
Claim formula_claim(const std::string& id, const std::string& family, std::size_t m_lo,
                    std::function<std::size_t(std::size_t)> formula, bool large_m = false) {
  return {id, "formulas", [=](const VerifyOptions& o) {
            ClaimResult r{id, "", ClaimStatus::skipped, ""};
            const auto fam = parse_family(family);
            SearchOptions so;
            so.time_budget = o.search_budget;
            std::size_t last = 0, holds_from = 0;
            bool last_ok = false;
            std::ostringstream detail;
            for (std::size_t m = m_lo; m <= o.max_m; ++m) {
              SearchResult res;
              try {
                res = forb_exact(m, fam, so);
              } catch (const Error& e) {
                if (e.code() != ErrorCode::limit_exceeded) throw;
                break;
              }
              if (res.status != SearchStatus::exact) {
                detail << "m=" << m << ": " << to_string(res.status) << " at " << res.value << "\n";
                break;
              }
              const bool ok = res.value == formula(m);
              detail << "m=" << m << ": " << res.value << " formula " << formula(m) << (ok ? "" : " differs") << "\n";
              if (ok && !last_ok) holds_from = m;
              last_ok = ok;
              last = m;
            }
            if (last == 0) {
              r.checked = "no m completed";
              r.detail = detail.str();
              return r;
            }
            r.checked = "m=" + std::to_string(m_lo) + ".." + std::to_string(last);
            r.status = last_ok ? ClaimStatus::pass : large_m ? ClaimStatus::skipped : ClaimStatus::fail;
            if (!last_ok && large_m) detail << "formula is stated for large m and is not reached by m=" << last << "\n";
            if (last_ok) detail << "holds for m=" << holds_from << ".." << last << " (observed threshold, not proven)\n";
            r.detail = detail.str();
            return r;
          }};
}

Claim value_claim(const std::string& id, const std::string& family, std::size_t m,
                  std::function<bool(std::size_t)> sums, std::size_t expected) {
  return {id, "formulas", [=](const VerifyOptions& o) {
            ClaimResult r{id, "m=" + std::to_string(m), ClaimStatus::fail, ""};
            SearchOptions so;
            so.time_budget = o.search_budget;
            const auto res = sums ? forb_restricted(m, parse_family(family), sums, so) : forb_exact(m, parse_family(family), so);
            if (res.status != SearchStatus::exact) {
              r.status = ClaimStatus::skipped;
              r.detail = "search stopped at " + std::to_string(res.value);
              return r;
            }
            r.detail = "value " + std::to_string(res.value) + " expected " + std::to_string(expected);
            if (res.value == expected) r.status = ClaimStatus::pass;
            return r;
          }};
}

Claim turan_claim() {
  const std::string id = "turan:131,F11:1+m+ex(m,K22)";
  return {id, "formulas", [=](const VerifyOptions& o) {
            ClaimResult r{id, "m=4..7", ClaimStatus::pass, ""};
            SearchOptions so;
            so.time_budget = o.search_budget;
            std::ostringstream detail;
            for (std::size_t m = 4; m <= 7; ++m) {
              const auto ex = ex_graph(m, complete_bipartite(2, 2)).value;
              const auto res = forb_exact(m, parse_family("131,F11"), so);
              detail << "m=" << m << ": forb " << res.value << " ex " << ex << "\n";
              if (res.status != SearchStatus::exact) {
                r.status = ClaimStatus::skipped;
                break;
              }
              if (res.value != 1 + m + ex) r.status = ClaimStatus::fail;
            }
            r.detail = detail.str();
            return r;
          }};
}

Claim hypergraph_claim() {
  const std::string id = "turan:1(3,2),Fh3:1+m+C(m,2)+ex3(m,H)";
  return {id, "formulas", [=](const VerifyOptions& o) {
            ClaimResult r{id, "m=5", ClaimStatus::fail, ""};
            Hypergraph h;
            h.vertices = 4;
            // Columns of Fh3 read as 3-sets of its four rows.
            const Matrix f = catalog("Fh3").matrix;
            for (std::size_t j = 0; j < f.cols(); ++j) {
              std::vector<std::size_t> e;
              for (std::size_t i = 0; i < f.rows(); ++i)
                if (f.at(i, j)) e.push_back(i);
              h.edges.push_back(e);
            }
            const std::size_t m = 5;
            const auto ex = ex_hypergraph(m, 3, h).value;
            SearchOptions so;
            so.time_budget = o.search_budget;
            const auto res = forb_exact(m, parse_family("1(3,2),Fh3"), so);
            r.detail = "forb " + std::to_string(res.value) + " ex3 " + std::to_string(ex);
            if (res.status != SearchStatus::exact) r.status = ClaimStatus::skipped;
            else if (res.value == 1 + m + choose2(m) + ex) r.status = ClaimStatus::pass;
            return r;
          }};
}

std::vector<ProductRow> product_rows() {
  std::vector<ProductRow> rows = {
      {"131", {"IxI"}, {}, true, false},
      {"122", {"IxI"}, {}, true, false},
      {"I3", {"IcxIc", "IcxT", "TxT"}, {}, true, false},
      {"Q3", {"IxIc"}, {}, true, false},
      {"Q8", {"TxT"}, {}, true, false},
      {"Q9", {"IxT", "IcxT"}, {}, true, false},
      {"141", {"IxI"}, {"IxIxI"}},
      {"F9", {"IcxIc", "IcxT", "TxT"}, {"IcxIcxIc"}},
      {"F10", {"IcxIc", "IcxT", "TxT"}, {"IcxIcxIc"}},
      {"F11", {"IxT", "IcxT", "TxT"}, {"TxTxT"}},
      {"F12", {"all"}, {"all"}},
      {"F13", {"all"}, {"TxTxT"}},
      {"F14", {"IxI", "IxIc", "IxT", "IcxIc", "IcxT"}, {"IxIxT", "IxIcxT", "IcxIcxT"}},
      {"F15", {"IxI", "IxT", "IcxIc", "IcxT", "TxT"}, {"IxIxT", "IcxIcxT"}},
  };
  for (const auto& [base, comp] : std::vector<std::pair<std::string, std::string>>{
           {"141", "041"}, {"F9", "F9c"}, {"F10", "F10c"}, {"F12", "F12c"}}) {
    for (const auto& r : rows)
      if (r.config == base) {
        ProductRow c = r;
        c.config = comp;
        c.complemented = true;
        rows.push_back(c);
        break;
      }
  }
  return rows;
}

}  // namespace

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::pass: return "PASS";
    case ClaimStatus::fail: return "FAIL";
    case ClaimStatus::skipped: return "SKIPPED(budget)";
  }
  return "?";
}

std::string ClaimResult::line() const { return id + "  " + checked + "  " + to_string(status); }

std::vector<Claim> builtin_claims() {
  std::vector<Claim> out;
  for (const auto& row : product_rows()) add_row(out, row);

  out.push_back(contain_spec_claim("141", "Ic(5)"));
  out.push_back(contain_spec_claim("141", "T(5)"));
  for (const char* f : {"F9", "F10"}) out.push_back(contain_spec_claim(f, "b01 x I(3)"));
  for (const char* f : {"F9", "F10", "F9c", "F10c"}) out.push_back(contain_spec_claim(f, "b01 x b01 x T(4)"));
  for (const char* f : {"F11", "F13"}) out.push_back(contain_spec_claim(f, "b01 x b01 x I(2)"));
  out.push_back(equal_claim("b01 x b01 x I(2)", "b01 x b01 x Ic(2)"));
  out.push_back(equal_claim("F11", "I(2) x I(2)"));
  out.push_back(contain_spec_claim("I3", "F9"));
  out.push_back(contain_spec_claim("I3", "F10"));
  out.push_back(contain_spec_claim("Q9", "F11"));
  out.push_back(contain_spec_claim("F14", "T(4) x T(4)"));
  out.push_back(contain_spec_claim("F15", "I(3) x Ic(3)"));
  out.push_back(contain_spec_claim("F10", "F16"));
  out.push_back(contain_spec_claim("F9", "F17"));
  out.push_back(all_products_claim("F13", 2));
  out.push_back(all_products_claim("F12", 3));
  out.push_back(all_products_claim("F12c", 3));

  out.push_back(formula_claim("forb:Q9:C(m,2)+2m-1", "Q9", 3, [](std::size_t m) { return choose2(m) + 2 * m - 1; }));
  out.push_back(formula_claim("forb:131,F9:m+2", "131,F9", 4, [](std::size_t m) { return m + 2; }, true));
  out.push_back(formula_claim("forb:122,F9:m+3", "122,F9", 4, [](std::size_t m) { return m + 3; }, true));
  out.push_back(formula_claim("forb:141,F9:m+5", "141,F9", 5, [](std::size_t m) { return m + 5; }, true));
  out.push_back(formula_claim("forb:Q9,131:2m", "Q9,131", 4, [](std::size_t m) { return 2 * m; }));
  out.push_back(formula_claim("forb:Q9,141:3m-2", "Q9,141", 5, [](std::size_t m) { return 3 * m - 2; }, true));
  out.push_back(value_claim("forb:Q9:sum=3:m-2", "Q9", 8, [](std::size_t s) { return s == 3; }, 6));
  out.push_back(value_claim("forb:Q9,1(2,3):sum>=5:l-1", "Q9,1(2,3)", 7, [](std::size_t s) { return s >= 5; }, 2));
  out.push_back(turan_claim());
  out.push_back(hypergraph_claim());
  return out;
}

std::vector<Claim> parse_claims(const std::string& text) {
  std::vector<Claim> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line.substr(first));
    std::string kind, id;
    words >> kind >> id;
    std::string rest;
    std::getline(words, rest);
    const auto colon = rest.find(':');
    if (id.empty() || colon == std::string::npos)
      fail(ErrorCode::parse_error, "claims line " + std::to_string(lineno) + ": expected '<kind> <id> <left> : <right>'");
    auto trim = [](std::string s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
      return s;
    };
    const std::string left = trim(rest.substr(0, colon));
    std::string right = trim(rest.substr(colon + 1));
    bool complemented = false;
    if (right.size() > 2 && right.substr(right.size() - 2) == "^c" && parse_product_pattern(right.substr(0, right.size() - 2))) {
      complemented = true;
      right = right.substr(0, right.size() - 2);
    }
    Claim c;
    if (kind == "avoid") {
      auto p = parse_product_pattern(right);
      if (p) {
        c = {id, "products", [=](const VerifyOptions& o) { return avoid_check(id, parse_spec(left), *p, complemented, o); }};
      } else {
        c = {id, "products", [=](const VerifyOptions&) {
               ClaimResult r{id, "fixed", ClaimStatus::pass, ""};
               if (auto cert = contains(parse_spec(left), parse_spec(right))) {
                 r.status = ClaimStatus::fail;
                 r.detail = cert->to_text();
               }
               return r;
             }};
      }
    } else if (kind == "contain") {
      auto p = parse_product_pattern(right);
      if (p) {
        c = {id, "products",
             [=](const VerifyOptions& o) { return contain_pattern_check(id, parse_spec(left), *p, complemented, o); }};
      } else {
        c = contain_spec_claim(left, right);
        c.id = id;
        auto inner = c.check;
        c.check = [inner, id](const VerifyOptions& o) {
          auto r = inner(o);
          r.id = id;
          return r;
        };
      }
    } else if (kind == "equal") {
      c = equal_claim(left, right);
      auto inner = c.check;
      c.id = id;
      c.check = [inner, id](const VerifyOptions& o) {
        auto r = inner(o);
        r.id = id;
        return r;
      };
    } else if (kind == "forb") {
      std::size_t m = 0, value = 0;
      if (std::sscanf(right.c_str(), "m=%zu value=%zu", &m, &value) != 2)
        fail(ErrorCode::parse_error, "claims line " + std::to_string(lineno) + ": expected 'm=<m> value=<v>'");
      c = value_claim(id, left, m, nullptr, value);
    } else {
      fail(ErrorCode::parse_error, "claims line " + std::to_string(lineno) + ": unknown kind '" + kind + "'");
    }
    // Specs are parsed now so that errors point at the file, not the run.
    if (kind == "forb") parse_family(left);
    else parse_spec(left);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClaimResult> verify_claims(const std::vector<Claim>& claims, const VerifyOptions& opts) {
  std::vector<ClaimResult> out;
  out.reserve(claims.size());
  for (const auto& c : claims) out.push_back(c.check(opts));
  return out;
}

// ---------------------------------------------------------------------------
// Table of pairs.

namespace {

struct Cell {
  std::string row;
  std::string col;
  std::string claim;
};

std::vector<Cell> table3_cells() {
  const std::vector<std::string> cols = {"141", "F9", "F10", "F11", "F12", "F13", "041", "F9c", "F10c", "F12c"};
  const std::string q = "Theta(m^2)", c = "Theta(m^3)", l = "Theta(m)", k = "Theta(1)", h = "Theta(m^3/2)";
  const std::vector<std::pair<std::string, std::vector<std::string>>> rows = {
      {"131", {q, "m+2", k, h, q, q, k, q, q, q}},
      {"122", {q, "m+3", k, h, q, q, k, q, q, q}},
      {"I3", {k, q, q, q, q, q, q, q, q, q}},
      {"Q3", {l, l, l, h, q, q, l, l, l, q}},
      {"Q8", {l, q, q, q, q, q, l, q, q, q}},
      {"Q9", {"3m-2", q, q, q, q, q, "3m-2", q, q, q}},
      {"141", {"", "m+5", k, h, c, q, k, c, c, c}},
      {"F9", {"", "", c, q, c, q, c, q, q, c}},
      {"F10", {"", "", "", q, c, q, c, q, q, c}},
      {"F11", {"", "", "", "", c, c, h, q, q, c}},
      {"F12", {"", "", "", "", "", c, c, c, c, c}},
      {"F13", {"", "", "", "", "", "", q, q, q, c}},
  };
  std::vector<Cell> out;
  for (const auto& [row, claims] : rows)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (!claims[j].empty()) out.push_back({row, cols[j], claims[j]});
  for (const char* row : {"131", "122", "I3", "Q3", "Q8", "Q9"})
    for (const char* col : {"F14", "F15"})
      out.push_back({row, col, std::string(row) == "Q8" && std::string(col) == "F14" ? "OPEN" : q});
  return out;
}

std::size_t claimed_power(const std::string& claim) {
  if (claim == "Theta(m^3)") return 3;
  if (claim == "Theta(m^2)" || claim == "OPEN") return 2;
  if (claim == "Theta(1)") return 0;
  return 1;
}

// Exact formula cells: value at m, if any.
std::optional<std::size_t> exact_formula(const std::string& claim, std::size_t m) {
  if (claim == "m+2") return m + 2;
  if (claim == "m+3") return m + 3;
  if (claim == "m+5") return m + 5;
  if (claim == "3m-2") return 3 * m - 2;
  return std::nullopt;
}

struct Found {
  std::string name;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

// The incidence matrix of a C4-free graph with the empty column and the
// singletons, or its complement.
std::optional<Found> graph_construction(const std::vector<Configuration>& fam, std::size_t m) {
  const auto ex = ex_graph(m, complete_bipartite(2, 2));
  Matrix a(m);
  a.append(BitColumn(m));
  for (std::size_t r = 0; r < m; ++r) a.append(BitColumn::from_word(m, std::uint64_t{1} << r));
  for (const auto& e : ex.witness.edges) a.append(BitColumn::from_word(m, (std::uint64_t{1} << e[0]) | (std::uint64_t{1} << e[1])));
  for (int flip = 0; flip < 2; ++flip) {
    const Matrix cand = flip ? complement(a) : a;
    if (!contains_any(fam, cand))
      return Found{std::string(flip ? "complement of " : "") + "[0 | I | C4-free graph] m=" + std::to_string(m), m, cand.cols()};
  }
  return std::nullopt;
}

// A_n x_G A^c_n for the largest C4-free bipartite G on n + n vertices.
std::optional<Found> bipartite_construction(const std::vector<Configuration>& fam, std::size_t n) {
  const auto g = zarankiewicz_graph(n, n);
  const SimpleMatrix a = graph_product(SimpleMatrix(block(BlockKind::identity, n)),
                                       SimpleMatrix(block(BlockKind::identity_complement, n)), g);
  if (contains_any(fam, a)) return std::nullopt;
  return Found{"I x_G Ic, G C4-free on " + std::to_string(n) + "+" + std::to_string(n), a.rows(), a.cols()};
}

std::optional<Found> product_construction(const std::vector<Configuration>& fam, std::size_t p, std::size_t size) {
  for (const auto& pat : unordered_patterns(p)) {
    const Matrix a = pattern_product(pat, size);
    if (!contains_any(fam, a)) return Found{pattern_to_string(pat) + " at size " + std::to_string(size), a.rows(), a.cols()};
  }
  return std::nullopt;
}

std::optional<Found> named_construction(const Cell& cell, std::size_t m) {
  struct Named {
    const char* row;
    const char* col;
    const char* name;
    ConstructionParams p;
  };
  static const Named named[] = {{"131", "F9", "c3", {}},      {"122", "F9", "f9_ell", {2, 2}},
                                {"141", "F9", "c4", {}},      {"Q9", "141", "q9_smallt", {4, 0}},
                                {"Q9", "041", "q9_smallt", {4, 0}}};
  for (const auto& n : named) {
    if (cell.row != n.row || cell.col != n.col) continue;
    const std::size_t mm = std::max(m, extremal_construction_min_m(n.name, n.p));
    SimpleMatrix a = extremal_construction(n.name, mm, n.p);
    Matrix out = a;
    if (cell.col == "041") out = complement(out);
    return Found{std::string(n.name) + (cell.col == "041" ? " complemented" : "") + " m=" + std::to_string(mm), mm,
                 out.cols()};
  }
  return std::nullopt;
}

}  // namespace

std::string table3_markdown(const Table3Options& opts) {
  std::ostringstream out;
  out << "| pair | claimed order | construction | columns | forb values | note |\n";
  out << "|---|---|---|---|---|---|\n";
  SearchOptions so;
  so.time_budget = opts.search_budget;
  for (const auto& cell : table3_cells()) {
    const auto fam = parse_family(cell.row + "," + cell.col);
    const bool formula = exact_formula(cell.claim, 1).has_value();
    const std::size_t power = claimed_power(cell.claim);
    std::optional<Found> found;
    if (formula) {
      found = named_construction(cell, opts.m_hi);
    } else if (cell.claim == "Theta(m^3/2)") {
      found = cell.row == "Q3" ? bipartite_construction(fam, opts.factor_size)
                               : graph_construction(fam, std::max<std::size_t>(opts.m_hi, 6));
    } else if (power >= 1) {
      found = product_construction(fam, power, opts.factor_size);
      if (!found && power == 1) found = product_construction(fam, 1, opts.factor_size * 2);
    }

    // Formula cells run on while the search stays exact.
    const std::size_t m_top = formula ? std::max(opts.m_hi, opts.formula_m_hi) : opts.m_hi;
    std::string values;
    std::size_t last_exact = 0, holds_from = 0;
    for (std::size_t m = opts.m_lo; m <= m_top; ++m) {
      SearchResult r;
      try {
        r = forb_exact(m, fam, so);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::limit_exceeded) throw;
        break;
      }
      if (!values.empty()) values += ", ";
      values += std::to_string(r.value);
      if (r.status != SearchStatus::exact) {
        values += "+";
        if (m >= opts.m_hi) break;
        continue;
      }
      last_exact = m;
      if (auto v = exact_formula(cell.claim, m)) {
        if (*v != r.value) holds_from = 0;
        else if (!holds_from) holds_from = m;
      }
    }
    values = "m=" + std::to_string(opts.m_lo) + "..: " + values;

    std::string note;
    if (cell.claim == "OPEN") {
      note = "OPEN";
    } else if (formula) {
      if (!last_exact) note = "no exact value";
      else if (holds_from) note = "formula holds for m=" + std::to_string(holds_from) + ".." + std::to_string(last_exact);
      else note = "formula not reached by m=" + std::to_string(last_exact);
    } else {
      note = "trend only";
      if (power >= 1 && !found) note += "; no product construction found";
    }

    out << "| " << cell.row << ", " << cell.col << " | " << cell.claim << " | " << (found ? found->name : "-") << " | "
        << (found ? std::to_string(found->cols) : "-") << " | " << values << " | " << note << " |\n";
  }
  out << "\nValues marked + are lower bounds from searches that ran out of budget.\n";
  return out.str();
}

}  // namespace forbconf
