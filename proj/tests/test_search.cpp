#include <doctest.h>

#include <cmath>
#include <random>

#include "forbconf/constructions.hpp"
#include "forbconf/containment.hpp"
#include "forbconf/error.hpp"
#include "forbconf/family_spec.hpp"
#include "forbconf/search.hpp"
#include "support.hpp"

using namespace forbconf;
using namespace testing_support;

namespace {

void check_witness(const SearchResult& r, std::size_t m, const std::vector<Configuration>& family) {
  CHECK(r.witness.rows() == m);
  CHECK(r.witness.cols() == r.value);
  CHECK(r.witness.matrix().is_simple());
  CHECK_FALSE(contains_any(family, r.witness));
}

// Largest avoiding subset of all 2^m columns, by plain enumeration.
std::size_t subset_oracle(std::size_t m, const std::vector<Configuration>& family) {
  const std::size_t n = std::size_t{1} << m;
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    const std::size_t size = std::popcount(s);
    if (size <= best) continue;
    Matrix a(m);
    for (std::size_t c = 0; c < n; ++c)
      if (s >> c & 1) a.append(BitColumn::from_word(m, c));
    bool bad = false;
    for (const auto& f : family)
      if (naive_contains(f.matrix(), a)) {
        bad = true;
        break;
      }
    if (!bad) best = size;
  }
  return best;
}

}  // namespace

// Values from tests/oracle/forb_oracle.py.
TEST_CASE("frozen brute-force values") {
  struct Row {
    const char* family;
    std::size_t m, value;
  };
  for (const Row& r : {Row{"Q9", 3, 8}, Row{"Q9", 4, 13}, Row{"131,F9", 4, 8}, Row{"122,F9", 4, 8}, Row{"I3", 4, 11},
                       Row{"131,F10", 4, 9}, Row{"Q9,131", 4, 8}, Row{"131,F10", 5, 6}}) {
    CAPTURE(r.family);
    CAPTURE(r.m);
    const auto family = parse_family(r.family);
    const auto res = forb_exact(r.m, family);
    CHECK(res.status == SearchStatus::exact);
    CHECK(res.value == r.value);
    check_witness(res, r.m, family);
  }
}

TEST_CASE("search agrees with subset enumeration on random families at m = 3") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Configuration> family;
    const int members = 1 + rng() % 2;
    for (int i = 0; i < members; ++i)
      family.push_back(canonicalize(random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3)));
    const auto res = forb_exact(3, family);
    CHECK(res.status == SearchStatus::exact);
    CHECK(res.value == subset_oracle(3, family));
    check_witness(res, 3, family);
  }
}

TEST_CASE("search without symmetry pruning gives the same values") {
  SearchOptions plain;
  plain.symmetry_pruning = false;
  for (const char* f : {"Q9", "131,F9", "Q8", "F11"}) {
    CAPTURE(f);
    const auto family = parse_family(f);
    CHECK(forb_exact(4, family, plain).value == forb_exact(4, family).value);
  }
}

TEST_CASE("complementing every member keeps forb") {
  for (const char* name : {"I3", "Q8", "F9", "F10", "F11", "F13"}) {
    CAPTURE(name);
    const Matrix f = catalog(name).matrix;
    CHECK(forb_exact(4, {canonicalize(f)}).value == forb_exact(4, {canonicalize(complement(f))}).value);
  }
}

TEST_CASE("trivial families") {
  CHECK(forb_exact(5, parse_family("1(1,1)")).value == 1);
  CHECK(forb_exact(5, parse_family("1(1,1),0(1,1)")).value == 0);
  // Members taller than m are never contained.
  CHECK(forb_exact(2, parse_family("141")).value == 4);
}

TEST_CASE("forb is not monotone in m for {1(3,1), F10}") {
  const auto family = parse_family("131,F10");
  CHECK(forb_exact(4, family).value == 9);
  CHECK(forb_exact(5, family).value == 6);
}

TEST_CASE("Q9 formula at small m and exact family values") {
  for (std::size_t m = 3; m <= 6; ++m) CHECK(forb_exact(m, parse_family("Q9")).value == m * (m - 1) / 2 + 2 * m - 1);
  CHECK(forb_exact(6, parse_family("Q9,131")).value == 12);
  for (std::size_t m = 4; m <= 8; ++m) CHECK(forb_exact(m, parse_family("131,F9")).value == std::max<std::size_t>(m + 2, 8));
}

TEST_CASE("restricted universes") {
  const auto q9 = parse_family("Q9");
  const auto r = forb_restricted(8, q9, [](std::size_t s) { return s == 3; });
  CHECK(r.value == 6);
  for (const auto& c : r.witness.columns()) CHECK(c.popcount() == 3);
  SearchOptions o;
  o.universe.max_sum = 1;
  CHECK(forb_exact(5, parse_family("I3"), o).value == 3);
  ColumnUniverse u;
  u.min_sum = 1;
  u.max_sum = 2;
  CHECK(u.enumerate(4).size() == 10);
  CHECK_FALSE(u.admits(BitColumn::from_word(4, 0)));
}

TEST_CASE("explicit column patterns") {
  SearchOptions o;
  for (std::uint64_t w : {0b001u, 0b010u, 0b100u, 0b011u}) o.universe.patterns.push_back(BitColumn::from_word(3, w));
  const auto r = forb_exact(3, parse_family("I3"), o);
  CHECK(r.value == 3);
}

TEST_CASE("a tiny budget reports a timeout with a valid lower bound") {
  SearchOptions o;
  o.time_budget = std::chrono::milliseconds(1);
  const auto family = parse_family("122,F9");
  const auto r = forb_exact(9, family, o);
  CHECK(r.status != SearchStatus::exact);
  CHECK(r.value <= 12);
  check_witness(r, 9, family);
}

TEST_CASE("initial lower bound is accepted and kept") {
  SearchOptions o;
  o.initial_lower_bound = extremal_construction("c3", 7);
  const auto family = parse_family("131,F9");
  const auto r = forb_exact(7, family, o);
  CHECK(r.value == 9);
  check_witness(r, 7, family);
}

TEST_CASE("search size limit") {
  CHECK_THROWS_AS(forb_exact(12, parse_family("Q9")), Error);
}

TEST_CASE("induction decomposition identity") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 2 + rng() % 5;
    const SimpleMatrix a(random_simple(rng, m, rng() % (std::size_t{1} << m)));
    const std::size_t r = rng() % m;
    const auto parts = induction_decompose(a, r);
    CHECK(parts.b.cols() + 2 * parts.c.cols() + parts.d.cols() == a.cols());
    CHECK(parts.b.rows() == m - 1);
    Matrix all = concat(concat(parts.b.matrix(), parts.c.matrix()), parts.d.matrix());
    CHECK(all.is_simple());
  }
  CHECK_THROWS_AS(induction_decompose(SimpleMatrix(Matrix::from_rows({"10"})), 1), Error);
}

TEST_CASE("slope estimate") {
  const auto s = slope_estimate(parse_family("Q9"), 4, 7);
  CHECK(s.points.size() == 4);
  CHECK(s.slope > 1.4);
  CHECK(s.slope < 2.0);
  CHECK(s.label == "finite-m trend, not an asymptotic claim");
  CHECK_THROWS_AS(slope_estimate(parse_family("Q9"), 4, 5), Error);
}
