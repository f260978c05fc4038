#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "forbconf/hypergraph.hpp"
#include "forbconf/matrix.hpp"

namespace testing_support {

using forbconf::BitColumn;
using forbconf::Matrix;

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  Matrix m(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    BitColumn c(rows);
    for (std::size_t i = 0; i < rows; ++i)
      if (bit(rng)) c.set(i);
    m.append(c);
  }
  return m;
}

// Distinct columns drawn from all 2^rows; `cols` is capped at 2^rows.
inline Matrix random_simple(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::uint64_t> all(std::size_t{1} << rows);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  Matrix m(rows);
  for (std::size_t j = 0; j < std::min(cols, all.size()); ++j) m.append(BitColumn::from_word(rows, all[j]));
  return m;
}

inline std::vector<std::size_t> random_perm(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Rows with fewer than t zeros, every column with at least one zero.
inline Matrix random_sparse_zeros(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t t) {
  std::vector<std::size_t> zeros(rows, 0);
  Matrix b(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < rows; ++i)
      if (zeros[i] + 1 < t) open.push_back(i);
    if (open.empty()) break;
    BitColumn c = BitColumn::ones(rows);
    const std::size_t first = open[rng() % open.size()];
    c.set(first, false);
    ++zeros[first];
    for (std::size_t i : open)
      if (i != first && zeros[i] + 1 < t && rng() % 4 == 0) {
        c.set(i, false);
        ++zeros[i];
      }
    b.append(c);
  }
  return b;
}

// Random maximal-ish C4-free bipartite graph on n + n vertices: edges are
// tried in random order and kept, with probability p, when no 4-cycle forms.
inline forbconf::BipartiteGraph random_c4_free(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  std::vector<std::pair<std::size_t, std::size_t>> all;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  std::bernoulli_distribution keep(p);
  for (auto [i, j] : all) {
    if (!keep(rng)) continue;
    bool cycle = false;
    for (std::size_t i2 = 0; i2 < n && !cycle; ++i2)
      if (i2 != i && adj[i2][j])
        for (std::size_t j2 = 0; j2 < n; ++j2)
          if (j2 != j && adj[i][j2] && adj[i2][j2]) {
            cycle = true;
            break;
          }
    if (!cycle) adj[i][j] = true;
  }
  forbconf::BipartiteGraph g;
  g.left = g.right = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i][j]) g.edges.emplace_back(i, j);
  return g;
}

}  // namespace testing_support
