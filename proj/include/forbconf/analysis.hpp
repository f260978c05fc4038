#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "forbconf/containment.hpp"
#include "forbconf/matrix.hpp"

namespace forbconf {

enum class RowClass { identically0, identically1, sparse, dense };

const char* to_string(RowClass c);

/// Class of every row of `m` restricted to the columns `cols`. Checked in the
/// order identically0, identically1, sparse (< t zeros), dense.
std::vector<RowClass> classify_rows(const Matrix& m, const std::vector<std::size_t>& cols, std::size_t t);

/// For each entry of `cols`: is there a sparse row with a 0 in that column?
std::vector<bool> identified_columns(const Matrix& m, const std::vector<std::size_t>& cols, std::size_t t);

/// Rows R and columns such that B[rows[i]][cols[j]] is 0 exactly when i == j.
struct AvoidingRows {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Every row of B must have fewer than t zeros and every column at least one.
/// Follows the halving argument: columns are split into a greedy set with
/// pairwise disjoint zero rows and the rest, and the larger half is used.
/// The result has |rows| >= 2^(2-t) * |B|.
AvoidingRows avoiding_rows(const Matrix& b, std::size_t t);

enum class Q9Type { type1, type2 };

/// Rows split as A_t, B_t, C_t. `columns[i]` is the t-column whose distinguished
/// entry sits in row a_rows[i]: its only 1 (type1) or only 0 (type2) within A_t.
struct Q9TypePartition {
  std::size_t t = 0;
  Q9Type type = Q9Type::type1;
  std::vector<std::size_t> a_rows;
  std::vector<std::size_t> b_rows;
  std::vector<std::size_t> c_rows;
  std::vector<std::size_t> columns;

  /// Rebuilds the block display and compares it with the t-columns of `a`.
  bool verify(const Matrix& a) const;
  std::string to_text() const;
};

struct Q9Classification {
  enum class Outcome { partition, refuted, unclassified };
  Outcome outcome = Outcome::partition;
  Q9TypePartition partition;
  std::optional<Certificate> refutation;  // a copy of Q9 in A
};

/// Requires 2 <= t <= m-1.
Q9Classification q9_classify(const SimpleMatrix& a, std::size_t t);

/// t copies of each column of I_k inside A: `rows` in order and, for each,
/// the t columns carrying it.
struct TIkWitness {
  std::size_t k = 0;
  std::vector<std::size_t> rows;
  std::vector<std::vector<std::size_t>> columns;
};

/// Largest k with t·I_k ≺ A. Among maximum row sets the lexicographically
/// least is returned, and within each row the lowest column indices.
TIkWitness find_tIk(const Matrix& a, std::size_t t);

struct StabilityLayer {
  std::size_t k = 0;
  std::vector<std::size_t> base_rows;            // the rows carrying t·I_k
  std::vector<std::size_t> rows;                 // rows kept for this layer
  std::vector<std::vector<std::size_t>> groups;  // C_i for each base row
  std::size_t low_rows = 0;                      // rows dropped for having few 1's
  std::size_t dense_rows = 0;
  std::size_t bad_columns = 0;
  std::size_t unidentified_columns = 0;
  std::size_t overlapping_columns = 0;  // 1's in two base rows

  std::size_t size() const;
};

struct StabilityParams {
  /// Rows with fewer 1's than this are set aside; zero means 3t-2.
  std::size_t low_ones = 0;
  /// Maximum row sets examined when minimising the leftover columns.
  std::size_t max_candidates = 200000;
};

struct StabilityDecomposition {
  std::size_t t = 0;
  std::size_t total_columns = 0;
  std::vector<StabilityLayer> layers;
  std::size_t discarded = 0;
  bool condition1 = false;  // k_{j+1} <= k_j / 2 and few layers
  bool condition2 = false;  // groups restrict to identity columns on the base rows
  bool condition3 = false;  // no dense row in a group, every column identified
  std::vector<std::string> violations;

  /// |A| divided by the total layer size; reported, never asserted.
  double ratio() const;
  std::string to_text() const;
};

/// Layered decomposition of a Q3(t)-avoiding matrix. Throws precondition
/// (with the containment witness in the message) if A contains Q3(t).
StabilityDecomposition q3_stability_decompose(const SimpleMatrix& a, std::size_t t, const StabilityParams& params = {});

/// Re-derives conditions 1 to 3 of `d` from `a` alone and stores them in `d`.
void check_stability(const Matrix& a, StabilityDecomposition& d);

}  // namespace forbconf
