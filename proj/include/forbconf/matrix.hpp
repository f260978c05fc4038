#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "forbconf/bit_column.hpp"

namespace forbconf {

/// A general (0,1)-matrix stored column-wise. Columns may repeat; their order
/// carries no meaning for containment but is kept for reproducible output.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t rows) : rows_(rows) {}
  Matrix(std::size_t rows, std::vector<BitColumn> columns);

  /// Builds a matrix from row strings of equal length.
  static Matrix from_rows(const std::vector<std::string>& rows);
  /// Parses the interchange text format: one line per row of '0'/'1', ended by
  /// a blank line or end of input. Leading blank and '#' comment lines are skipped.
  static Matrix parse_text(std::string_view text);
  /// Parses every matrix in a multi-matrix text block.
  static std::vector<Matrix> parse_all(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }
  bool empty() const noexcept { return columns_.empty(); }

  const BitColumn& column(std::size_t j) const { return columns_[j]; }
  std::span<const BitColumn> columns() const noexcept { return columns_; }
  bool at(std::size_t row, std::size_t col) const { return columns_[col].test(row); }

  void append(BitColumn column);

  std::size_t row_sum(std::size_t row) const;
  std::string row_string(std::size_t row) const;
  bool is_simple() const;

  /// Rows as lines, each newline-terminated. An empty matrix prints nothing.
  std::string to_text() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<BitColumn> columns_;
};

/// A matrix with pairwise distinct columns.
class SimpleMatrix {
 public:
  SimpleMatrix() = default;
  explicit SimpleMatrix(std::size_t rows) : inner_(rows) {}
  /// Throws ErrorCode::invalid_argument when `m` has a repeated column.
  explicit SimpleMatrix(Matrix m);

  const Matrix& matrix() const noexcept { return inner_; }
  operator const Matrix&() const noexcept { return inner_; }

  std::size_t rows() const noexcept { return inner_.rows(); }
  std::size_t cols() const noexcept { return inner_.cols(); }
  const BitColumn& column(std::size_t j) const { return inner_.column(j); }
  std::span<const BitColumn> columns() const noexcept { return inner_.columns(); }

  friend bool operator==(const SimpleMatrix& a, const SimpleMatrix& b) { return a.inner_ == b.inner_; }

 private:
  Matrix inner_;
};

/// A (0,1)-matrix up to row and column permutation.
///
/// The canonical key is the row-major encoding of the column-sorted matrix,
/// minimised over every row permutation, so two configurations are equal iff
/// their keys are.
class Configuration {
 public:
  Configuration() = default;

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::map<BitColumn, std::size_t>& column_multiset() const noexcept { return multiset_; }
  const std::string& canon_key() const noexcept { return key_; }
  /// The canonical representative.
  const Matrix& matrix() const noexcept { return representative_; }

  friend bool operator==(const Configuration& a, const Configuration& b) { return a.key_ == b.key_; }
  friend bool operator<(const Configuration& a, const Configuration& b) { return a.key_ < b.key_; }

 private:
  friend Configuration canonicalize(const Matrix& m);

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<BitColumn, std::size_t> multiset_;
  std::string key_;
  Matrix representative_;
};

/// Largest row count accepted by canonicalize().
inline constexpr std::size_t kMaxCanonicalRows = 12;

Matrix complement(const Matrix& m);
SimpleMatrix simplify(const Matrix& m);
/// Submatrix with rows and columns in the given order. Indices must be in
/// range and distinct.
Matrix restrict(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
Configuration canonicalize(const Matrix& m);
SimpleMatrix select_by_sum(const SimpleMatrix& a, const std::function<bool(std::size_t)>& predicate);

/// Row permutation then column permutation: result row i is input row
/// row_perm[i], result column j is input column col_perm[j].
Matrix permute(const Matrix& m, const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm);
/// Vertical concatenation of two matrices with the same column count.
Matrix stack(const Matrix& top, const Matrix& bottom);
/// Horizontal concatenation of matrices with the same row count.
Matrix concat(const Matrix& left, const Matrix& right);
/// Every column of the given matrix repeated `times` times in place.
Matrix repeat_columns(const Matrix& m, std::size_t times);

}  // namespace forbconf
