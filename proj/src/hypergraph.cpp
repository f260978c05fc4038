#include "forbconf/hypergraph.hpp"

#include <sstream>

namespace forbconf {

std::size_t Hypergraph::uniformity() const {
  if (edges.empty()) return 0;
  const std::size_t k = edges.front().size();
  for (const auto& e : edges)
    if (e.size() != k) return 0;
  return k;
}

std::string Hypergraph::to_text() const {
  std::ostringstream out;
  out << "vertices " << vertices << " edges " << edges.size() << '\n';
  for (const auto& e : edges) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

Graph complete_bipartite(std::size_t r, std::size_t s) {
  Graph g;
  g.vertices = r + s;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) g.edges.push_back({i, r + j});
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  g.vertices = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.edges.push_back({i, j});
  return g;
}

BipartiteGraph BipartiteGraph::complete(std::size_t left, std::size_t right) {
  BipartiteGraph g;
  g.left = left;
  g.right = right;
  for (std::size_t i = 0; i < left; ++i)
    for (std::size_t j = 0; j < right; ++j) g.edges.emplace_back(i, j);
  return g;
}

}  // namespace forbconf
