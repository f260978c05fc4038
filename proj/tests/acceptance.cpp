// Acceptance run: one line per criterion, "ACn PASS|FAIL <summary>".
// Exit status is 0 when every failure is one of the documented discrepancies
// listed in kKnownRefuted, and 1 otherwise.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forbconf/analysis.hpp"
#include "forbconf/claims.hpp"
#include "forbconf/constructions.hpp"
#include "forbconf/containment.hpp"
#include "forbconf/error.hpp"
#include "forbconf/family_spec.hpp"
#include "forbconf/search.hpp"
#include "forbconf/turan.hpp"
#include "support.hpp"

using namespace forbconf;
using namespace testing_support;
using Clock = std::chrono::steady_clock;

namespace {

// F12 and its complement lie in every 3-fold product with an I^c factor, so
// these builtin claims fail for a mathematical reason, not a software one.
const std::set<std::string> kKnownRefuted = {
    "avoid:F12:IxIxIc",          "avoid:F12:IxIcxIc",          "avoid:F12:IxIcxT",
    "avoid:F12:IcxIcxIc",        "avoid:F12:IcxIcxT",          "avoid:F12:IcxTxT",
    "avoid:F12c:(IxIxIc)^c",     "avoid:F12c:(IxIcxIc)^c",     "avoid:F12c:(IxIcxT)^c",
    "avoid:F12c:(IcxIcxIc)^c",   "avoid:F12c:(IcxIcxT)^c",     "avoid:F12c:(IcxTxT)^c",
    "allprod:F12:3fold",         "allprod:F12c:3fold"};

struct Outcome {
  bool pass = true;
  bool expected_failure = false;
  std::string summary;
};

int unexpected = 0;

void report(const char* id, const std::function<Outcome()>& run) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s %s %s (%.1f s)\n", id, o.pass ? "PASS" : "FAIL", o.summary.c_str(), s);
  std::fflush(stdout);
  if (!o.pass && !o.expected_failure) ++unexpected;
}

std::size_t forb_of(std::size_t m, const std::string& family, SearchOptions opts = {}) {
  const auto r = forb_exact(m, parse_family(family), opts);
  if (r.status != SearchStatus::exact) fail(ErrorCode::internal, family + " did not finish at m=" + std::to_string(m));
  return r.value;
}

std::chrono::milliseconds env_budget(const char* name, long fallback_ms) {
  const char* v = std::getenv(name);
  return std::chrono::milliseconds(v ? std::atol(v) : fallback_ms);
}

Outcome ac1() {
  std::mt19937_64 rng(2024);
  std::size_t disagreements = 0, contained = 0;
  const std::size_t pairs = 10000;
  for (std::size_t i = 0; i < pairs; ++i) {
    const Matrix f = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, 0.3 + 0.4 * (rng() % 2));
    const Matrix a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 10, 0.5);
    const bool fast = contains(f, a).has_value();
    contained += fast;
    if (fast != naive_contains(f, a).has_value()) ++disagreements;
  }
  std::ostringstream s;
  s << pairs << " pairs, " << contained << " contained, " << disagreements << " disagreements";
  return {disagreements == 0, false, s.str()};
}

Outcome ac2() {
  std::size_t checked = 0;
  std::vector<std::string> bad;
  for (const auto& name : catalog_names()) {
    const auto& e = catalog(name);
    const std::vector<Configuration> f{e.config};
    const std::vector<Configuration> fc{canonicalize(complement(e.matrix))};
    for (std::size_t m : {4, 5}) {
      const auto a = forb_exact(m, f), b = forb_exact(m, fc);
      ++checked;
      if (a.status != SearchStatus::exact || b.status != SearchStatus::exact || a.value != b.value)
        bad.push_back(name + "@" + std::to_string(m));
    }
  }
  std::ostringstream s;
  s << checked << " (configuration, m) pairs, forb(m,F) = forb(m,F^c) on all";
  if (!bad.empty()) {
    s.str("");
    s << "mismatch:";
    for (const auto& b : bad) s << ' ' << b;
  }
  return {bad.empty(), false, s.str()};
}

Outcome ac3() {
  std::ostringstream s;
  bool ok = true;
  for (std::size_t m : {3, 4, 5}) {
    const std::size_t want = m * (m - 1) / 2 + 2 * m - 1;
    const std::size_t got = forb_of(m, "Q9");
    ok = ok && got == want;
    s << "m=" << m << ": " << got << (got == want ? " = " : " != ") << want << "; ";
  }
  s << "the listed value 11 at m=3 disagrees with C(3,2)+2*3-1 = 8, the formula is what is checked";
  return {ok, false, s.str()};
}

Outcome ac4() {
  const std::size_t a = forb_of(6, "Q9,1(3,1)");
  SearchOptions cut;
  cut.universe.max_sum = 3;  // 1(4,1) excludes every column of sum 4 or more
  const std::size_t b = forb_of(8, "Q9,1(4,1)", cut);
  const std::size_t lower = extremal_construction_size("q9_smallt", 8, {4, 0});
  std::ostringstream s;
  s << "forb(6,{Q9,1(3,1)}) = " << a << ", forb(8,{Q9,1(4,1)}) = " << b << " with column sums <= 3, construction "
    << lower;
  return {a == 12 && b == 22 && lower == 22, false, s.str()};
}

Outcome ac5() {
  const auto budget = env_budget("FORBCONF_AC5_BUDGET_MS", 120000);
  std::ostringstream s;
  bool ok = true;
  struct Case {
    const char* family;
    std::size_t offset;
  };
  for (const Case c : {Case{"1(3,1),F9", 2}, Case{"1(2,2),F9", 3}}) {
    SearchOptions o;
    o.time_budget = budget;
    std::size_t largest = 0, value = 0;
    for (std::size_t m = 4; m <= 11; ++m) {
      const auto r = forb_exact(m, parse_family(c.family), o);
      if (r.status != SearchStatus::exact) break;
      largest = m;
      value = r.value;
    }
    const bool holds = largest >= 6 && value == largest + c.offset;
    ok = ok && holds;
    s << "{" << c.family << "} largest exact m=" << largest << " value " << value << (holds ? " = " : " != ") << "m+"
      << c.offset << (largest == 11 ? " (11 is the search limit)" : "") << "; ";
  }
  std::size_t verified = 0;
  const struct {
    const char* name;
    ConstructionParams p;
  } constructions[] = {{"c3", {}}, {"f9_ell", {2, 2}}};
  for (const auto& c : constructions) {
    const auto family = parse_family(extremal_construction_family(c.name, c.p));
    for (std::size_t m = extremal_construction_min_m(c.name, c.p); m <= 100; ++m) {
      const SimpleMatrix a = extremal_construction(c.name, m, c.p);
      const std::size_t want = std::string(c.name) == "c3" ? m + 2 : m + 3;
      if (a.cols() != want || a.rows() != m || contains_any(family, a)) {
        ok = false;
        s << c.name << " wrong at m=" << m << "; ";
        break;
      }
      ++verified;
    }
  }
  s << verified << " constructions up to m=100 sized m+2 / m+3 and avoiding";
  return {ok, false, s.str()};
}

Outcome ac6() {
  std::ostringstream s;
  bool ok = true;
  const Graph c4 = complete_bipartite(2, 2);
  for (std::size_t m = 4; m <= 7; ++m) {
    const std::size_t ex = ex_graph(m, c4).value;
    const std::size_t f = forb_of(m, "1(3,1),F11");
    ok = ok && f == 1 + m + ex;
    s << "m=" << m << ": " << f << (f == 1 + m + ex ? " = " : " != ") << "1+m+" << ex << "; ";
  }
  return {ok, false, s.str()};
}

Outcome ac7() {
  VerifyOptions o;
  o.sizes = {3, 4};
  o.max_contain_size = 4;
  std::size_t total = 0, passed = 0;
  std::vector<std::string> known, other;
  for (const auto& c : builtin_claims()) {
    if (c.group != "products") continue;
    ++total;
    const auto r = c.check(o);
    if (r.status == ClaimStatus::pass) {
      ++passed;
    } else if (kKnownRefuted.count(r.id)) {
      known.push_back(r.id);
    } else {
      other.push_back(r.line());
    }
  }
  std::ostringstream s;
  s << passed << "/" << total << " product claims pass at sizes 3,4";
  if (!known.empty())
    s << "; " << known.size() << " refuted because F12 and F12^c occur in every 3-fold product with an I^c factor";
  for (const auto& l : other) s << "; unexpected: " << l;
  return {known.empty() && other.empty(), other.empty(), s.str()};
}

Outcome ac8() {
  std::mt19937_64 rng(8);
  std::size_t failures = 0, trials = 0;
  while (trials < 1000) {
    const std::size_t t = 2 + trials % 3;
    const Matrix b = random_sparse_zeros(rng, 2 + rng() % 10, 1 + rng() % 16, t);
    if (b.cols() == 0) continue;
    ++trials;
    const auto r = avoiding_rows(b, t);
    const bool sized = r.rows.size() == r.cols.size() && r.rows.size() * (std::size_t{1} << (t - 2)) >= b.cols();
    bool ic = true;
    for (std::size_t i = 0; i < r.rows.size(); ++i)
      for (std::size_t j = 0; j < r.cols.size(); ++j) ic = ic && b.at(r.rows[i], r.cols[j]) == (i != j);
    const bool witnessed = r.rows.empty() || contains(block(BlockKind::identity_complement, r.rows.size()), b);
    if (!(sized && ic && witnessed)) ++failures;
  }
  std::ostringstream s;
  s << trials << " trials, " << failures << " failures";
  return {failures == 0, false, s.str()};
}

Outcome ac9() {
  std::mt19937_64 rng(9);
  std::ostringstream s;
  bool ok = true;
  s.precision(3);
  for (std::size_t m : {12, 16}) {
    const std::size_t n = m / 2;
    const auto g = random_c4_free(rng, n, 1.0);
    const SimpleMatrix a = graph_product(SimpleMatrix(block(BlockKind::identity, n)),
                                         SimpleMatrix(block(BlockKind::identity_complement, n)), g);
    for (std::size_t low : {0, 2}) {
      StabilityParams p;
      p.low_ones = low;
      auto d = q3_stability_decompose(a, 2, p);
      check_stability(a, d);
      const bool good = d.condition1 && d.condition2 && d.condition3;
      ok = ok && good;
      s << "m=" << m << " |A|=" << a.cols() << " low_ones=" << (low ? low : 4) << ": conditions 1-3 "
        << (good ? "hold" : "fail") << ", " << d.layers.size() << " layers, ratio " << std::fixed << d.ratio()
        << std::defaultfloat << "; ";
    }
  }
  return {ok, false, s.str()};
}

Outcome ac10() {
  std::ostringstream s;
  bool ok = true;
  const auto family = parse_family("1(2,2),Q9");
  for (std::size_t m = 5; m <= 20; ++m) {
    const SimpleMatrix a = extremal_construction("sec5_counterexample", m);
    if (a.rows() != m || a.cols() != 2 * m + 1 || contains_any(family, a)) {
      ok = false;
      s << "construction wrong at m=" << m << "; ";
    }
  }
  const std::size_t f = forb_of(5, "1(3,1),Q9");
  ok = ok && f == 10;
  s << "constructions m=5..20 have 2m+1 columns and avoid {1(2,2),Q9}; forb(5,{1(3,1),Q9}) = " << f;
  return {ok, false, s.str()};
}

}  // namespace

int main() {
  report("AC1", ac1);
  report("AC2", ac2);
  report("AC3", ac3);
  report("AC4", ac4);
  report("AC5", ac5);
  report("AC6", ac6);
  report("AC7", ac7);
  report("AC8", ac8);
  report("AC9", ac9);
  report("AC10", ac10);
  return unexpected == 0 ? 0 : 1;
}
