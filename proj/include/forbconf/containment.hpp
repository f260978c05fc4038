#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forbconf/matrix.hpp"

namespace forbconf {

/// Witness for F ≺ A (row and column injections) or a note describing the
/// exhaustive check that found no copy.
struct Certificate {
  enum class Kind { containment, avoidance };

  Kind kind = Kind::containment;
  std::vector<std::size_t> row_map;  // F-row i -> A-row row_map[i]
  std::vector<std::size_t> col_map;  // F-column j -> A-column col_map[j]
  std::string checked_universe;

  /// Re-checks injectivity and every entry F[i][j] == A[row_map[i]][col_map[j]].
  bool verify(const Matrix& f, const Matrix& a) const;
  /// "row_map: ..." and "col_map: ..." lines, or a single "avoidance: ..." line.
  std::string to_text() const;

  static Certificate avoidance(std::string universe) {
    Certificate c;
    c.kind = Kind::avoidance;
    c.checked_universe = std::move(universe);
    return c;
  }
};

/// Which side of F drives the backtracking.
///  - rows: injective row maps, columns settled by per-pattern counting
///  - columns: injective column maps, rows settled the same way
///  - automatic: whichever has the smaller falling-factorial estimate
enum class ContainStrategy { automatic, rows, columns };

std::optional<Certificate> contains(const Matrix& f, const Matrix& a,
                                    ContainStrategy strategy = ContainStrategy::automatic);

using FamilyHit = std::pair<std::size_t, Certificate>;

/// First member of `family` (in order) contained in `a`.
std::optional<FamilyHit> contains_any(const std::vector<Configuration>& family, const Matrix& a);

/// Whether A with `c` appended contains a family member, assuming A alone does
/// not. A reported witness always maps some F-column onto the appended column,
/// which has index a.cols() in the certificate.
std::optional<FamilyHit> contains_incremental(const std::vector<Configuration>& family, const SimpleMatrix& a,
                                              const BitColumn& c);

/// Unpruned enumeration of every row injection and column injection. Only
/// meant as a reference for testing contains().
std::optional<Certificate> naive_contains(const Matrix& f, const Matrix& a);

}  // namespace forbconf
