#pragma once

#include <cstddef>

#include "forbconf/hypergraph.hpp"

namespace forbconf {

struct TuranResult {
  std::size_t value = 0;
  Hypergraph witness;  // an extremal host with `value` edges
  std::size_t nodes = 0;
};

inline constexpr std::size_t kMaxTuranGraphVertices = 10;
inline constexpr std::size_t kMaxTuranHypergraphVertices = 8;

/// ex(m, G) by branch and bound over the edges of K_m. A copy of G is any
/// injective vertex map carrying edges to edges; it need not be induced.
/// Throws limit_exceeded above kMaxTuranGraphVertices.
TuranResult ex_graph(std::size_t m, const Graph& forbidden);

/// ex^(k)(m, H) for a k-uniform H, by the same scheme over k-subsets.
/// Independent of ex_graph so the two can be checked against each other at k = 2.
TuranResult ex_hypergraph(std::size_t m, std::size_t k, const Hypergraph& forbidden);

/// Largest K_{2,2}-free bipartite graph with parts of size r and s, by
/// branch and bound over the r*s possible edges. Throws limit_exceeded
/// when r*s exceeds 36.
BipartiteGraph zarankiewicz_graph(std::size_t r, std::size_t s);

}  // namespace forbconf
