#include <doctest.h>

#include <random>

#include "forbconf/error.hpp"
#include "forbconf/matrix.hpp"
#include "support.hpp"

using namespace forbconf;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::internal;
}

}  // namespace

TEST_CASE("bit columns wider than one word") {
  BitColumn c(100);
  c.set(0);
  c.set(70);
  c.set(99);
  CHECK(c.test(70));
  CHECK_FALSE(c.test(69));
  CHECK(c.popcount() == 3);
  CHECK(c.complemented().popcount() == 97);
  CHECK(c.gather({99, 70, 1}).to_string() == "110");
  CHECK(BitColumn::from_string(c.to_string()) == c);
  CHECK(c.stacked(BitColumn::ones(3)).popcount() == 6);
}

TEST_CASE("text format round trip") {
  const Matrix m = Matrix::parse_text("# comment\n\n101\n011\n\n");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.to_text() == "101\n011\n");
  CHECK(Matrix::parse_text(m.to_text()) == m);

  const auto all = Matrix::parse_all("10\n01\n\n111\n");
  REQUIRE(all.size() == 2);
  CHECK(all[1].rows() == 1);
  CHECK(all[1].cols() == 3);

  CHECK(code_of([] { Matrix::parse_text("10\n0a\n"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { Matrix::parse_text("10\n011\n"); }) == ErrorCode::parse_error);
  CHECK(code_of([] { Matrix::parse_text("\n# nothing\n"); }) == ErrorCode::parse_error);
}

TEST_CASE("simple matrices reject repeated columns") {
  CHECK(code_of([] { SimpleMatrix(Matrix::from_rows({"110", "001"})); }) == ErrorCode::invalid_argument);
  CHECK(simplify(Matrix::from_rows({"110", "001"})).cols() == 2);
  CHECK(Matrix::from_rows({"10", "01"}).is_simple());
}

TEST_CASE("complement is an involution and preserves shape") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = random_matrix(rng, 1 + rng() % 7, rng() % 9);
    const Matrix c = complement(a);
    CHECK(c.rows() == a.rows());
    CHECK(c.cols() == a.cols());
    CHECK(complement(c) == a);
    for (std::size_t j = 0; j < a.cols(); ++j) CHECK(c.column(j).popcount() == a.rows() - a.column(j).popcount());
  }
}

TEST_CASE("restrict composes") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix a = random_matrix(rng, 6, 8);
    const auto r1 = random_perm(rng, 6), c1 = random_perm(rng, 8);
    const std::vector<std::size_t> rows1(r1.begin(), r1.begin() + 4), cols1(c1.begin(), c1.begin() + 5);
    const auto r2 = random_perm(rng, 4), c2 = random_perm(rng, 5);
    const std::vector<std::size_t> rows2(r2.begin(), r2.begin() + 3), cols2(c2.begin(), c2.begin() + 3);
    std::vector<std::size_t> rows, cols;
    for (auto i : rows2) rows.push_back(rows1[i]);
    for (auto j : cols2) cols.push_back(cols1[j]);
    CHECK(restrict(restrict(a, rows1, cols1), rows2, cols2) == restrict(a, rows, cols));
  }
  const Matrix a = Matrix::from_rows({"10", "01"});
  CHECK(code_of([&] { restrict(a, {0, 0}, {0}); }) == ErrorCode::invalid_argument);
  CHECK(code_of([&] { restrict(a, {2}, {0}); }) == ErrorCode::out_of_range);
}

TEST_CASE("canonical form ignores row and column order") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = rng() % 7;
    const Matrix a = random_matrix(rng, rows, cols);
    const Matrix b = permute(a, random_perm(rng, rows), random_perm(rng, cols));
    const Configuration ca = canonicalize(a), cb = canonicalize(b);
    CHECK(ca == cb);
    CHECK(canonicalize(ca.matrix()) == ca);
    CHECK(ca.rows() == rows);
    CHECK(ca.cols() == cols);
  }
}

TEST_CASE("canonical form separates inequivalent matrices") {
  const Matrix i3 = Matrix::from_rows({"100", "010", "001"});
  const Matrix t3 = Matrix::from_rows({"111", "011", "001"});
  CHECK_FALSE(canonicalize(i3) == canonicalize(t3));
  CHECK_FALSE(canonicalize(i3) == canonicalize(complement(i3)));
  // Same column multiset under a row swap, different under column sums.
  CHECK(canonicalize(Matrix::from_rows({"10", "10", "01"})) == canonicalize(Matrix::from_rows({"01", "10", "01"})));
  CHECK_FALSE(canonicalize(Matrix::from_rows({"110"})) == canonicalize(Matrix::from_rows({"100"})));
  CHECK(code_of([] { canonicalize(Matrix(kMaxCanonicalRows + 1)); }) == ErrorCode::limit_exceeded);
}

TEST_CASE("stack, concat and repeat") {
  const Matrix a = Matrix::from_rows({"10", "01"});
  CHECK(stack(a, a).rows() == 4);
  CHECK(concat(a, a).cols() == 4);
  CHECK(repeat_columns(a, 3).cols() == 6);
  CHECK(code_of([&] { stack(a, Matrix::from_rows({"1"})); }) == ErrorCode::invalid_argument);
  CHECK(select_by_sum(SimpleMatrix(Matrix::from_rows({"0110", "0011"})), [](std::size_t s) { return s == 1; }).cols() == 2);
}
