#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "forbconf/matrix.hpp"

namespace forbconf {

/// Which columns a search may use. With no explicit pattern list the universe
/// is closed under row permutations, which lets the search fix the smallest
/// chosen column to a canonical form.
struct ColumnUniverse {
  std::optional<std::size_t> min_sum;
  std::optional<std::size_t> max_sum;
  std::function<bool(std::size_t)> sum_predicate;
  std::vector<BitColumn> patterns;  // nonempty: only these columns

  bool admits(const BitColumn& c) const;
  bool permutation_invariant() const { return patterns.empty(); }
  /// All admitted m-row columns in (column sum, numeric value) order.
  std::vector<BitColumn> enumerate(std::size_t m) const;
};

enum class SearchStatus { exact, lower_bound_only, timeout };

const char* to_string(SearchStatus s);

struct SearchOptions {
  ColumnUniverse universe;
  /// Zero means no limit.
  std::chrono::milliseconds time_budget{0};
  bool symmetry_pruning = true;
  std::optional<SimpleMatrix> initial_lower_bound;
  /// Above this many enumerated copies a family member is checked with
  /// contains_incremental at every inclusion instead of precomputed sets.
  std::size_t max_constraint_sets = 4000000;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::size_t universe = 0;
  std::size_t forced_out = 0;    // columns that alone contain a member
  std::size_t free_columns = 0;  // columns in no copy of any member
  std::size_t pair_sets = 0;
  std::size_t larger_sets = 0;
  std::size_t oracle_members = 0;
};

struct SearchResult {
  std::size_t value = 0;
  SimpleMatrix witness;
  SearchStatus status = SearchStatus::exact;
  SearchStats stats;
  std::chrono::duration<double> elapsed{0};
};

/// Largest simple m-rowed matrix over opts.universe avoiding every family
/// member, by branch and bound over the candidate columns.
SearchResult forb_exact(std::size_t m, const std::vector<Configuration>& family, const SearchOptions& opts = {});

/// forb_exact with the universe cut down to columns whose sum satisfies `sum_predicate`.
SearchResult forb_restricted(std::size_t m, const std::vector<Configuration>& family,
                             std::function<bool(std::size_t)> sum_predicate, SearchOptions opts = {});

struct InductionParts {
  SimpleMatrix b;  // columns seen only with 0 in row r
  SimpleMatrix c;  // columns seen with both
  SimpleMatrix d;  // columns seen only with 1
};

/// Splits A at row r into B, C, D on the remaining m-1 rows.
InductionParts induction_decompose(const SimpleMatrix& a, std::size_t r);

struct SlopePoint {
  std::size_t m = 0;
  std::size_t value = 0;
  SearchStatus status = SearchStatus::exact;
  double residual = 0.0;
};

struct SlopeReport {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<SlopePoint> points;
  std::string label = "finite-m trend, not an asymptotic claim";
};

/// Least-squares fit of log(forb) against log(m) for m in [m_lo, m_hi].
SlopeReport slope_estimate(const std::vector<Configuration>& family, std::size_t m_lo, std::size_t m_hi,
                           const SearchOptions& opts = {});

}  // namespace forbconf
