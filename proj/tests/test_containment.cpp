#include <doctest.h>

#include <random>

#include "forbconf/constructions.hpp"
#include "forbconf/containment.hpp"
#include "support.hpp"

using namespace forbconf;
using namespace testing_support;

TEST_CASE("contains agrees with the naive reference") {
  std::mt19937_64 rng(21);
  int contained = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Matrix f = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, 0.3 + 0.4 * (rng() % 2));
    const Matrix a = random_matrix(rng, f.rows() + rng() % 3, rng() % 11);
    const auto fast = contains(f, a);
    const auto slow = naive_contains(f, a);
    REQUIRE(fast.has_value() == slow.has_value());
    if (fast) {
      ++contained;
      CHECK(fast->verify(f, a));
      CHECK(slow->verify(f, a));
    }
  }
  // Both outcomes are exercised.
  CHECK(contained > 300);
  CHECK(contained < 2700);
}

TEST_CASE("both strategies give the same answer") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 1000; ++trial) {
    const Matrix f = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5);
    const Matrix a = random_matrix(rng, 4 + rng() % 3, rng() % 12);
    const auto by_rows = contains(f, a, ContainStrategy::rows);
    const auto by_cols = contains(f, a, ContainStrategy::columns);
    REQUIRE(by_rows.has_value() == by_cols.has_value());
    if (by_rows) CHECK(by_rows->verify(f, a));
    if (by_cols) CHECK(by_cols->verify(f, a));
  }
}

TEST_CASE("containment is invariant under complementing both sides") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const Matrix f = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 4);
    const Matrix a = random_matrix(rng, 5, rng() % 10);
    CHECK(contains(f, a).has_value() == contains(complement(f), complement(a)).has_value());
  }
}

TEST_CASE("containment is transitive") {
  std::mt19937_64 rng(24);
  int chains = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Matrix f = random_matrix(rng, 1 + rng() % 3, 1 + rng() % 3);
    const Matrix g = random_matrix(rng, 3 + rng() % 2, 2 + rng() % 4);
    const Matrix a = random_matrix(rng, 5, 4 + rng() % 8);
    if (contains(f, g) && contains(g, a)) {
      ++chains;
      CHECK(contains(f, a).has_value());
    }
  }
  CHECK(chains > 50);
}

TEST_CASE("a matrix contains its own restrictions") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const Matrix a = random_matrix(rng, 5, 7);
    const auto rows = random_perm(rng, 5), cols = random_perm(rng, 7);
    const Matrix f = restrict(a, {rows.begin(), rows.begin() + 3}, {cols.begin(), cols.begin() + 4});
    const auto cert = contains(f, a);
    REQUIRE(cert);
    CHECK(cert->verify(f, a));
  }
}

TEST_CASE("repeated columns of F need distinct columns of A") {
  const Matrix f = Matrix::from_rows({"11", "00"});
  CHECK_FALSE(contains(f, Matrix::from_rows({"10", "01"})));
  CHECK(contains(f, Matrix::from_rows({"110", "001", "000"})));
  CHECK(contains(Matrix::from_rows({"1"}), Matrix::from_rows({"01"})));
  CHECK_FALSE(contains(Matrix::from_rows({"1", "1"}), Matrix::from_rows({"1"})));
}

TEST_CASE("contains_incremental matches a full check") {
  std::mt19937_64 rng(26);
  const std::vector<Configuration> family = {catalog("Q9").config, catalog("F9").config, catalog("131").config};
  int hits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t m = 5;
    Matrix base = random_simple(rng, m, 3 + rng() % 5);
    SimpleMatrix a(m);
    // Grow A column by column while it avoids the family.
    for (const auto& c : base.columns()) {
      Matrix grown = a.matrix();
      grown.append(c);
      const bool full = contains_any(family, grown).has_value();
      const auto inc = contains_incremental(family, a, c);
      REQUIRE(full == inc.has_value());
      if (inc) {
        ++hits;
        CHECK(inc->second.verify(family[inc->first].matrix(), grown));
        CHECK(std::find(inc->second.col_map.begin(), inc->second.col_map.end(), a.cols()) != inc->second.col_map.end());
        break;
      }
      a = SimpleMatrix(grown);
    }
  }
  CHECK(hits > 20);
}

TEST_CASE("contains_any reports the first member") {
  const std::vector<Configuration> family = {canonicalize(Matrix::from_rows({"1", "1", "1"})),
                                             canonicalize(Matrix::from_rows({"1"}))};
  const auto hit = contains_any(family, Matrix::from_rows({"1", "1", "1"}));
  REQUIRE(hit);
  CHECK(hit->first == 0);
  CHECK_FALSE(contains_any(family, Matrix::from_rows({"0", "0"})));
}

TEST_CASE("certificates print both maps") {
  const auto cert = contains(Matrix::from_rows({"1"}), Matrix::from_rows({"01", "10"}));
  REQUIRE(cert);
  CHECK(cert->to_text().find("row_map:") != std::string::npos);
  CHECK(cert->to_text().find("col_map:") != std::string::npos);
  CHECK(Certificate::avoidance("x").to_text().find("avoidance") != std::string::npos);
}
