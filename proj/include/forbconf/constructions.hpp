#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "forbconf/hypergraph.hpp"
#include "forbconf/matrix.hpp"

namespace forbconf {

enum class BlockKind { identity, identity_complement, triangular, ones, zeros, literal };

/// One factor of a product. `k` is the row count; `l` the column count for
/// the ones/zeros kinds; `literal` is used only by BlockKind::literal.
struct Block {
  BlockKind kind = BlockKind::identity;
  std::size_t k = 1;
  std::size_t l = 1;
  Matrix literal;
  std::string name;  // display name for literals, e.g. "b01"

  std::string to_string() const;
};

struct ProductExpr {
  std::vector<Block> factors;

  std::string to_string() const;
};

Block make_block(BlockKind kind, std::size_t k, std::size_t l = 1);
/// The 1x2 matrix [0 1].
Block b01();

/// I_k, I_k^c, T_k, 1_{k,l} or 0_{k,l}. The last two repeat their column.
Matrix block(BlockKind kind, std::size_t k, std::size_t l = 1);
Matrix block_matrix(const Block& b);

inline constexpr std::size_t kDefaultProductCap = std::size_t{1} << 20;

/// Every vertical concatenation of one column per factor. Columns are ordered
/// lexicographically by factor column index, first factor most significant.
Matrix product(const ProductExpr& expr, std::size_t cap = kDefaultProductCap);
Matrix product(const std::vector<Matrix>& factors, std::size_t cap = kDefaultProductCap);

/// A ×_G B: column a of A on top of column b of B for each edge (a, b) of G,
/// in edge order.
SimpleMatrix graph_product(const SimpleMatrix& a, const SimpleMatrix& b, const BipartiteGraph& g);

/// Column (00), t copies each of (10) and (01), and (11). Requires t >= 2.
Configuration q3t(std::size_t t);
/// q3t(t) without its (11) column.
Configuration q3t0(std::size_t t);
/// Each column of I_k repeated t times.
Matrix times_identity(std::size_t t, std::size_t k);

struct CatalogEntry {
  std::string name;
  Matrix matrix;  // as displayed, rows top to bottom
  Configuration config;
  std::string group;  // quadratic, cubic4, cubic6, complement, hypergraph
};

const CatalogEntry& catalog(const std::string& name);
std::vector<std::string> catalog_names();

struct ConstructionParams {
  std::size_t k = 0;
  std::size_t l = 0;
};

struct ConstructionInfo {
  std::string name;
  std::string params;  // which of k, l are used
  std::string family;  // family spec the result avoids
  std::string size;    // size formula
};

/// Named lower-bound constructions. Each result is checked against its family
/// and its size formula before being returned.
///  - c2, c3, c4: avoid {1(k,1), F9} for k = 2, 3, 4
///  - f9_ell(k, l): c_{k+1} plus l-1 columns of sum m-1; avoids {1(k,l), F9}
///  - q9_smallt(k): avoids {Q9, 1(k,1)}
///  - q9_l2(k): q9_smallt(k+1) plus one column of sum m-1; avoids {Q9, 1(k,2)}
///  - q9_ell_a(k, l), q9_ell_b(k, l): the two l >= 3 constructions for {Q9, 1(k,l)}
///  - sec5_counterexample: 2m+1 columns avoiding {1(2,2), Q9}
SimpleMatrix extremal_construction(const std::string& name, std::size_t m, ConstructionParams params = {});
/// Size the named construction has at m (no construction is built).
std::size_t extremal_construction_size(const std::string& name, std::size_t m, ConstructionParams params = {});
/// Family spec the named construction avoids.
std::string extremal_construction_family(const std::string& name, ConstructionParams params = {});
/// Smallest m accepted by the named construction.
std::size_t extremal_construction_min_m(const std::string& name, ConstructionParams params = {});
std::vector<ConstructionInfo> extremal_construction_list();

/// Vertex-edge incidence matrix. Throws on a repeated edge.
SimpleMatrix incidence_matrix(const Hypergraph& h);

}  // namespace forbconf
