#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace forbconf {

/// Vertices are 0..vertices-1; each edge is a sorted vertex list.
struct Hypergraph {
  std::size_t vertices = 0;
  std::vector<std::vector<std::size_t>> edges;

  /// Uniformity, or 0 when there are no edges or sizes differ.
  std::size_t uniformity() const;
  std::string to_text() const;
};

using Graph = Hypergraph;

Graph complete_bipartite(std::size_t r, std::size_t s);
Graph complete_graph(std::size_t n);

/// Bipartite graph between `left` and `right` vertex classes; an edge (i, j)
/// joins left vertex i to right vertex j.
struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  static BipartiteGraph complete(std::size_t left, std::size_t right);
};

}  // namespace forbconf
