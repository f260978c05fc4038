#include "forbconf/turan.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "forbconf/error.hpp"

namespace forbconf {

namespace {

// ---------------------------------------------------------------------------
// Graphs: host adjacency as one 16-bit row per vertex.

class GraphSearch {
 public:
  GraphSearch(std::size_t m, const Graph& g) : m_(m), g_(g), host_(m, 0) {
    pattern_adj_.assign(g.vertices, 0);
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : g.edges) {
      if (e.size() != 2) fail(ErrorCode::invalid_argument, "ex_graph: forbidden graph has an edge of size " + std::to_string(e.size()));
      const std::size_t a = std::min(e[0], e[1]), b = std::max(e[0], e[1]);
      if (a == b || b >= g.vertices) fail(ErrorCode::invalid_argument, "ex_graph: bad edge in forbidden graph");
      if (!seen.emplace(a, b).second) fail(ErrorCode::invalid_argument, "ex_graph: repeated edge in forbidden graph");
      pattern_adj_[a] |= 1u << b;
      pattern_adj_[b] |= 1u << a;
      pattern_edges_.emplace_back(a, b);
    }
    for (std::size_t j = 1; j < m; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs_.emplace_back(i, j);
    map_.assign(g.vertices, 0);
  }

  TuranResult run() {
    TuranResult r;
    if (g_.vertices > m_ || pairs_.empty()) {
      // No copy fits, so the complete graph is extremal.
      for (auto [i, j] : pairs_) add(i, j);
      r.value = pairs_.size();
      r.witness = snapshot();
      return r;
    }
    std::size_t start = 0, count = 0;
    add(0, 1);
    if (!creates_copy(0, 1)) {
      // Any nonempty extremal graph can be relabelled to use edge 01.
      start = 1;
      count = 1;
    } else {
      remove(0, 1);
    }
    best_ = count;
    best_host_ = host_;
    dfs(start, count);
    r.value = best_;
    host_ = best_host_;
    r.witness = snapshot();
    r.nodes = nodes_;
    return r;
  }

 private:
  std::size_t m_;
  const Graph& g_;
  std::vector<std::uint16_t> host_;
  std::vector<std::uint16_t> pattern_adj_;
  std::vector<std::pair<std::size_t, std::size_t>> pattern_edges_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> map_;
  std::vector<std::size_t> order_;
  std::uint32_t placed_ = 0;
  std::size_t best_ = 0;
  std::vector<std::uint16_t> best_host_;
  std::size_t nodes_ = 0;

  void add(std::size_t u, std::size_t v) {
    host_[u] |= static_cast<std::uint16_t>(1u << v);
    host_[v] |= static_cast<std::uint16_t>(1u << u);
  }
  void remove(std::size_t u, std::size_t v) {
    host_[u] &= static_cast<std::uint16_t>(~(1u << v));
    host_[v] &= static_cast<std::uint16_t>(~(1u << u));
  }

  Graph snapshot() const {
    Graph h;
    h.vertices = m_;
    for (auto [i, j] : pairs_)
      if ((host_[i] >> j) & 1u) h.edges.push_back({i, j});
    return h;
  }

  // Is there a copy of the pattern that uses host edge uv?
  bool creates_copy(std::size_t u, std::size_t v) {
    for (auto [a, b] : pattern_edges_) {
      // Remaining pattern vertices, neighbours of the placed ones first.
      order_.clear();
      std::uint32_t placed = (1u << a) | (1u << b);
      while (order_.size() + 2 < g_.vertices) {
        std::size_t pick = g_.vertices;
        for (std::size_t p = 0; p < g_.vertices && pick == g_.vertices; ++p)
          if (!((placed >> p) & 1u) && (pattern_adj_[p] & placed)) pick = p;
        for (std::size_t p = 0; p < g_.vertices && pick == g_.vertices; ++p)
          if (!((placed >> p) & 1u)) pick = p;
        order_.push_back(pick);
        placed |= 1u << pick;
      }
      for (int flip = 0; flip < 2; ++flip) {
        map_[a] = flip ? v : u;
        map_[b] = flip ? u : v;
        placed_ = (1u << a) | (1u << b);
        if (extend(0, (1u << u) | (1u << v))) return true;
      }
    }
    return false;
  }

  bool extend(std::size_t d, std::uint32_t used) {
    if (d == order_.size()) return true;
    const std::size_t p = order_[d];
    for (std::size_t h = 0; h < m_; ++h) {
      if ((used >> h) & 1u) continue;
      bool ok = true;
      for (std::size_t q = 0; q < g_.vertices && ok; ++q)
        if (((pattern_adj_[p] >> q) & 1u) && ((placed_ >> q) & 1u) && !((host_[h] >> map_[q]) & 1u)) ok = false;
      if (!ok) continue;
      map_[p] = h;
      placed_ |= 1u << p;
      const bool found = extend(d + 1, used | (1u << h));
      placed_ &= ~(1u << p);
      if (found) return true;
    }
    return false;
  }

  void dfs(std::size_t idx, std::size_t count) {
    ++nodes_;
    if (count + (pairs_.size() - idx) <= best_) return;
    if (idx == pairs_.size()) {
      best_ = count;
      best_host_ = host_;
      return;
    }
    const auto [u, v] = pairs_[idx];
    add(u, v);
    if (!creates_copy(u, v)) dfs(idx + 1, count + 1);
    remove(u, v);
    dfs(idx + 1, count);
  }
};

// ---------------------------------------------------------------------------
// k-uniform hypergraphs: edges as vertex bitmasks, host as a presence table.

class HyperSearch {
 public:
  HyperSearch(std::size_t m, std::size_t k, const Hypergraph& h) : m_(m), k_(k), n_(h.vertices) {
    std::set<std::uint32_t> seen;
    incident_.assign(n_, {});
    for (const auto& e : h.edges) {
      if (e.size() != k) fail(ErrorCode::invalid_argument, "ex_hypergraph: forbidden hypergraph is not " + std::to_string(k) + "-uniform");
      std::vector<std::size_t> verts = e;
      std::sort(verts.begin(), verts.end());
      if (std::adjacent_find(verts.begin(), verts.end()) != verts.end() || (!verts.empty() && verts.back() >= n_))
        fail(ErrorCode::invalid_argument, "ex_hypergraph: bad edge in forbidden hypergraph");
      std::uint32_t mask = 0;
      for (auto x : verts) mask |= 1u << x;
      if (!seen.insert(mask).second) fail(ErrorCode::invalid_argument, "ex_hypergraph: repeated edge in forbidden hypergraph");
      for (auto x : verts) incident_[x].push_back(pattern_.size());
      pattern_.push_back(std::move(verts));
    }
    if (k >= 1 && k <= m) {
      // k-subsets in colex order, so the first one is {0, ..., k-1}.
      std::uint32_t w = (1u << k) - 1;
      while (w < (1u << m)) {
        subsets_.push_back(w);
        const std::uint32_t c = w & (~w + 1), r = w + c;
        w = (((r ^ w) >> 2) / c) | r;
      }
    }
    present_.assign(std::size_t{1} << m, 0);
    map_.assign(n_, 0);
    mapped_.assign(n_, 0);
  }

  TuranResult run() {
    TuranResult r;
    if (pattern_.empty() && n_ <= m_)
      fail(ErrorCode::invalid_argument, "ex_hypergraph: an edgeless forbidden hypergraph is contained in every host");
    std::size_t start = 0, count = 0;
    if (!subsets_.empty()) {
      present_[subsets_[0]] = 1;
      if (!creates_copy(subsets_[0])) {
        start = 1;
        count = 1;
      } else {
        present_[subsets_[0]] = 0;
      }
    }
    best_ = count;
    best_edges_ = current();
    dfs(start, count);
    r.value = best_;
    r.witness.vertices = m_;
    for (auto mask : best_edges_) {
      std::vector<std::size_t> e;
      for (std::size_t x = 0; x < m_; ++x)
        if ((mask >> x) & 1u) e.push_back(x);
      r.witness.edges.push_back(std::move(e));
    }
    r.nodes = nodes_;
    return r;
  }

 private:
  std::size_t m_, k_, n_;
  std::vector<std::vector<std::size_t>> pattern_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::uint32_t> subsets_;
  std::vector<char> present_;
  std::vector<std::size_t> map_;
  std::vector<char> mapped_;
  std::size_t best_ = 0;
  std::vector<std::uint32_t> best_edges_;
  std::size_t nodes_ = 0;

  std::vector<std::uint32_t> current() const {
    std::vector<std::uint32_t> out;
    for (auto s : subsets_)
      if (present_[s]) out.push_back(s);
    return out;
  }

  // Every pattern edge through p whose vertices are all placed must land on a host edge.
  bool consistent(std::size_t p) const {
    for (auto ei : incident_[p]) {
      std::uint32_t mask = 0;
      bool full = true;
      for (auto x : pattern_[ei]) {
        if (!mapped_[x]) {
          full = false;
          break;
        }
        mask |= 1u << map_[x];
      }
      if (full && !present_[mask]) return false;
    }
    return true;
  }

  bool place(std::size_t p, std::uint32_t used) {
    if (p == n_) return true;
    if (mapped_[p]) return place(p + 1, used);
    for (std::size_t h = 0; h < m_; ++h) {
      if ((used >> h) & 1u) continue;
      map_[p] = h;
      mapped_[p] = 1;
      const bool ok = consistent(p) && place(p + 1, used | (1u << h));
      mapped_[p] = 0;
      if (ok) return true;
    }
    return false;
  }

  bool creates_copy(std::uint32_t edge) {
    if (n_ > m_) return false;
    std::vector<std::size_t> host_verts;
    for (std::size_t x = 0; x < m_; ++x)
      if ((edge >> x) & 1u) host_verts.push_back(x);
    for (const auto& pe : pattern_) {
      std::vector<std::size_t> perm = host_verts;
      do {
        for (std::size_t i = 0; i < k_; ++i) {
          map_[pe[i]] = perm[i];
          mapped_[pe[i]] = 1;
        }
        bool ok = true;
        for (std::size_t i = 0; i < k_ && ok; ++i) ok = consistent(pe[i]);
        const bool found = ok && place(0, edge);
        for (std::size_t i = 0; i < k_; ++i) mapped_[pe[i]] = 0;
        if (found) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
  }

  void dfs(std::size_t idx, std::size_t count) {
    ++nodes_;
    if (count + (subsets_.size() - idx) <= best_) return;
    if (idx == subsets_.size()) {
      best_ = count;
      best_edges_ = current();
      return;
    }
    const std::uint32_t s = subsets_[idx];
    present_[s] = 1;
    if (!creates_copy(s)) dfs(idx + 1, count + 1);
    present_[s] = 0;
    dfs(idx + 1, count);
  }
};

// Rows of the left part as bitmasks over the right part. An edge (i, j)
// closes a K_{2,2} exactly when some other left vertex shares j and another
// neighbour of i.
class BipartiteSearch {
 public:
  BipartiteSearch(std::size_t r, std::size_t s) : r_(r), s_(s), rows_(r, 0) {}

  BipartiteGraph run() {
    best_rows_ = rows_;
    dfs(0, 0);
    BipartiteGraph g;
    g.left = r_;
    g.right = s_;
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < s_; ++j)
        if ((best_rows_[i] >> j) & 1u) g.edges.emplace_back(i, j);
    return g;
  }

 private:
  std::size_t r_, s_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint64_t> best_rows_;
  std::size_t best_ = 0;

  bool closes(std::size_t i, std::size_t j) const {
    const std::uint64_t others = rows_[i] & ~(std::uint64_t{1} << j);
    for (std::size_t q = 0; q < r_; ++q)
      if (q != i && ((rows_[q] >> j) & 1u) && (rows_[q] & others)) return true;
    return false;
  }

  void dfs(std::size_t idx, std::size_t count) {
    const std::size_t total = r_ * s_;
    if (count + (total - idx) <= best_ && idx != 0) return;
    if (idx == total) {
      if (count > best_) {
        best_ = count;
        best_rows_ = rows_;
      }
      return;
    }
    const std::size_t i = idx / s_, j = idx % s_;
    rows_[i] |= std::uint64_t{1} << j;
    if (!closes(i, j)) dfs(idx + 1, count + 1);
    rows_[i] &= ~(std::uint64_t{1} << j);
    dfs(idx + 1, count);
  }
};

}  // namespace

BipartiteGraph zarankiewicz_graph(std::size_t r, std::size_t s) {
  if (r * s > 36) fail(ErrorCode::limit_exceeded, "zarankiewicz_graph: at most 36 vertex pairs are supported");
  return BipartiteSearch(r, s).run();
}

TuranResult ex_graph(std::size_t m, const Graph& forbidden) {
  if (m > kMaxTuranGraphVertices)
    fail(ErrorCode::limit_exceeded, "ex_graph: exhaustive mode supports at most " +
                                        std::to_string(kMaxTuranGraphVertices) + " vertices; a heuristic bound is needed beyond that");
  if (forbidden.edges.empty() && forbidden.vertices <= m)
    fail(ErrorCode::invalid_argument, "ex_graph: an edgeless forbidden graph is contained in every host");
  return GraphSearch(m, forbidden).run();
}

TuranResult ex_hypergraph(std::size_t m, std::size_t k, const Hypergraph& forbidden) {
  if (k == 0) fail(ErrorCode::invalid_argument, "ex_hypergraph: uniformity must be at least 1");
  if (m > kMaxTuranHypergraphVertices)
    fail(ErrorCode::limit_exceeded, "ex_hypergraph: exhaustive mode supports at most " +
                                        std::to_string(kMaxTuranHypergraphVertices) + " vertices");
  return HyperSearch(m, k, forbidden).run();
}

}  // namespace forbconf
