#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "forbconf/error.hpp"
#include "forbconf/turan.hpp"

using namespace forbconf;

namespace {

// Whether `host` has a (not necessarily induced) copy of `g`, by trying
// every injective vertex map.
bool has_copy(const Hypergraph& host, const Hypergraph& g) {
  std::set<std::vector<std::size_t>> edges(host.edges.begin(), host.edges.end());
  std::vector<std::size_t> pool(host.vertices);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::size_t> pick(g.vertices);
  std::vector<bool> chosen(host.vertices);
  // Enumerate ordered g.vertices-subsets through permutations of selections.
  std::vector<bool> mask(host.vertices, false);
  std::fill(mask.begin(), mask.begin() + std::min(g.vertices, host.vertices), true);
  if (g.vertices > host.vertices) return false;
  do {
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < host.vertices; ++i)
      if (mask[i]) sel.push_back(i);
    do {
      bool ok = true;
      for (const auto& e : g.edges) {
        std::vector<std::size_t> img;
        for (auto v : e) img.push_back(sel[v]);
        std::sort(img.begin(), img.end());
        if (!edges.count(img)) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(sel.begin(), sel.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return false;
}

Graph path3() {
  Graph g;
  g.vertices = 3;
  g.edges = {{0, 1}, {1, 2}};
  return g;
}

}  // namespace

TEST_CASE("ex(m, C4) known values") {
  const std::size_t expected[] = {4, 6, 7, 9, 11};
  for (std::size_t m = 4; m <= 8; ++m) {
    const auto r = ex_graph(m, complete_bipartite(2, 2));
    CHECK(r.value == expected[m - 4]);
    CHECK(r.witness.edges.size() == r.value);
    CHECK_FALSE(has_copy(r.witness, complete_bipartite(2, 2)));
  }
}

TEST_CASE("ex(m, K3) is floor(m^2/4)") {
  for (std::size_t m = 3; m <= 9; ++m) CHECK(ex_graph(m, complete_graph(3)).value == m * m / 4);
}

TEST_CASE("graph and hypergraph searches agree at k = 2") {
  for (const Graph& g : {complete_bipartite(2, 2), complete_graph(3), path3(), complete_bipartite(1, 3)})
    for (std::size_t m = 3; m <= 7; ++m) {
      const auto a = ex_graph(m, g);
      const auto b = ex_hypergraph(m, 2, g);
      CHECK(a.value == b.value);
      CHECK_FALSE(has_copy(b.witness, g));
    }
  // A path on three vertices forces a matching.
  CHECK(ex_graph(7, path3()).value == 3);
}

TEST_CASE("3-uniform Turan numbers") {
  Hypergraph h;
  h.vertices = 4;
  h.edges = {{0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  const std::size_t expected[] = {2, 5, 10, 15};
  for (std::size_t m = 4; m <= 7; ++m) {
    const auto r = ex_hypergraph(m, 3, h);
    CHECK(r.value == expected[m - 4]);
    CHECK_FALSE(has_copy(r.witness, h));
  }
  // K4^(3): ex(5) = 7.
  Hypergraph k4;
  k4.vertices = 4;
  k4.edges = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  CHECK(ex_hypergraph(5, 3, k4).value == 7);
}

TEST_CASE("Zarankiewicz numbers z(n,n;2,2)") {
  const std::size_t expected[] = {3, 6, 9, 12, 16};
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto g = zarankiewicz_graph(n, n);
    CHECK(g.edges.size() == expected[n - 2]);
    // No two left vertices share two neighbours.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        std::size_t common = 0;
        for (std::size_t j = 0; j < n; ++j) {
          auto has = [&](std::size_t i) {
            return std::find(g.edges.begin(), g.edges.end(), std::pair{i, j}) != g.edges.end();
          };
          common += has(a) && has(b);
        }
        CHECK(common <= 1);
      }
  }
  CHECK(zarankiewicz_graph(3, 5).edges.size() == 8);
}

TEST_CASE("Turan limits and errors") {
  CHECK_THROWS_AS(ex_graph(kMaxTuranGraphVertices + 1, complete_graph(3)), Error);
  CHECK_THROWS_AS(ex_hypergraph(kMaxTuranHypergraphVertices + 1, 3, complete_graph(3)), Error);
  CHECK_THROWS_AS(zarankiewicz_graph(7, 7), Error);
  Graph empty;
  empty.vertices = 2;
  CHECK_THROWS_AS(ex_graph(4, empty), Error);
  // A forbidden graph with more vertices than the host is never present.
  CHECK(ex_graph(3, complete_graph(4)).value == 3);
}
