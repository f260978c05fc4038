#include "forbconf/search.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "forbconf/containment.hpp"
#include "forbconf/error.hpp"

namespace forbconf {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::lower_bound_only: return "lower_bound_only";
    case SearchStatus::timeout: return "timeout";
  }
  return "?";
}

bool ColumnUniverse::admits(const BitColumn& c) const {
  const std::size_t s = c.popcount();
  if (min_sum && s < *min_sum) return false;
  if (max_sum && s > *max_sum) return false;
  if (sum_predicate && !sum_predicate(s)) return false;
  if (!patterns.empty()) return std::find(patterns.begin(), patterns.end(), c) != patterns.end();
  return true;
}

std::vector<BitColumn> ColumnUniverse::enumerate(std::size_t m) const {
  std::vector<BitColumn> out;
  if (!patterns.empty()) {
    for (const auto& p : patterns)
      if (p.width() == m && admits(p) && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    std::sort(out.begin(), out.end(), BitColumn::sum_then_value_less);
    return out;
  }
  if (m > 20) fail(ErrorCode::limit_exceeded, "column universe on " + std::to_string(m) + " rows is too large");
  for (std::size_t w = 0; w <= m; ++w) {
    if (min_sum && w < *min_sum) continue;
    if (max_sum && w > *max_sum) continue;
    if (sum_predicate && !sum_predicate(w)) continue;
    if (w == 0) {
      out.emplace_back(m);
      continue;
    }
    // Gosper's hack: next larger word with the same popcount.
    std::uint64_t x = (std::uint64_t{1} << w) - 1;
    const std::uint64_t limit = std::uint64_t{1} << m;
    while (x < limit) {
      out.push_back(BitColumn::from_word(m, x));
      const std::uint64_t c = x & (~x + 1);
      const std::uint64_t r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
  return out;
}

namespace {

using Words = std::vector<std::uint64_t>;
using Clock = std::chrono::steady_clock;

inline void set_bit(Words& w, std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void clear_bit(Words& w, std::size_t i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool test_bit(const Words& w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1u; }

std::size_t count(const Words& w) {
  std::size_t n = 0;
  for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

std::optional<std::size_t> lowest(const Words& w) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
  return std::nullopt;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ x;
    return h;
  }
};

// Copies of one family member inside the universe, as sets of vertex indices.
// Rows of F are placed injectively (equal rows in increasing order); the
// columns of each pattern are then chosen as subsets of the matching bucket.
class CopyEnumerator {
 public:
  CopyEnumerator(const Matrix& f, std::size_t m, const std::vector<std::uint64_t>& vertex_words,
                 const std::vector<std::uint32_t>& active)
      : f_(f), m_(m), words_(vertex_words), active_(active) {
    const std::size_t k = f.rows();
    row_order_.resize(k);
    for (std::size_t i = 0; i < k; ++i) row_order_[i] = i;
    std::stable_sort(row_order_.begin(), row_order_.end(),
                     [&](std::size_t a, std::size_t b) { return f.row_string(a) < f.row_string(b); });
    equal_prev_.assign(k, false);
    for (std::size_t d = 1; d < k; ++d)
      equal_prev_[d] = f.row_string(row_order_[d]) == f.row_string(row_order_[d - 1]);
    std::map<std::uint32_t, std::size_t> demand;
    for (std::size_t j = 0; j < f.cols(); ++j) {
      std::uint32_t key = 0;
      for (std::size_t d = 0; d < k; ++d)
        if (f.at(row_order_[d], j)) key |= 1u << d;
      ++demand[key];
    }
    demands_.assign(demand.begin(), demand.end());
  }

  /// Calls sink(set) for each copy until sink returns false or `work_limit`
  /// choice steps are spent. `compatible(u, v)` may veto two columns
  /// appearing together, which prunes the choice early. Returns false when
  /// the enumeration was cut short.
  template <typename Sink, typename Compatible>
  bool enumerate(Sink&& sink, Compatible&& compatible, std::uint64_t work_limit) {
    work_left_ = work_limit;
    stopped_ = false;
    std::vector<std::uint32_t> chosen;
    std::vector<std::size_t> rows(f_.rows());
    std::vector<bool> used(m_, false);
    std::vector<std::vector<std::uint32_t>> buckets(demands_.size());
    std::function<void(std::size_t)> rec = [&](std::size_t d) {
      if (stopped_) return;
      if (d == rows.size()) {
        for (auto& b : buckets) b.clear();
        for (auto v : active_) {
          std::uint32_t key = 0;
          for (std::size_t i = 0; i < rows.size(); ++i)
            if ((words_[v] >> rows[i]) & 1u) key |= 1u << i;
          for (std::size_t q = 0; q < demands_.size(); ++q)
            if (demands_[q].first == key) {
              buckets[q].push_back(v);
              break;
            }
        }
        for (std::size_t q = 0; q < demands_.size(); ++q)
          if (buckets[q].size() < demands_[q].second) return;
        chosen.clear();
        pick(0, 0, 0, buckets, chosen, sink, compatible);
        return;
      }
      const std::size_t lo = equal_prev_[d] ? rows[d - 1] + 1 : 0;
      for (std::size_t r = lo; r < m_ && !stopped_; ++r) {
        if (used[r]) continue;
        used[r] = true;
        rows[d] = r;
        rec(d + 1);
        used[r] = false;
      }
    };
    rec(0);
    return !stopped_;
  }

 private:
  const Matrix& f_;
  std::size_t m_;
  const std::vector<std::uint64_t>& words_;
  const std::vector<std::uint32_t>& active_;
  std::vector<std::size_t> row_order_;
  std::vector<bool> equal_prev_;
  std::vector<std::pair<std::uint32_t, std::size_t>> demands_;
  std::uint64_t work_left_ = 0;
  bool stopped_ = false;

  template <typename Sink, typename Compatible>
  void pick(std::size_t di, std::size_t taken, std::size_t start, const std::vector<std::vector<std::uint32_t>>& buckets,
            std::vector<std::uint32_t>& chosen, Sink& sink, Compatible& compatible) {
    if (stopped_) return;
    if (work_left_-- == 0) {
      stopped_ = true;
      return;
    }
    if (di == demands_.size()) {
      std::vector<std::uint32_t> s = chosen;
      std::sort(s.begin(), s.end());
      if (!sink(s)) stopped_ = true;
      return;
    }
    const std::size_t d = demands_[di].second;
    if (taken == d) {
      pick(di + 1, 0, 0, buckets, chosen, sink, compatible);
      return;
    }
    const auto& bucket = buckets[di];
    for (std::size_t i = start; i + (d - taken) <= bucket.size() && !stopped_; ++i) {
      const std::uint32_t u = bucket[i];
      bool ok = true;
      for (auto c : chosen)
        if (!compatible(c, u)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(u);
      pick(di, taken + 1, i + 1, buckets, chosen, sink, compatible);
      chosen.pop_back();
    }
  }
};

class Solver {
 public:
  Solver(std::size_t m, const std::vector<Configuration>& family, const SearchOptions& opts)
      : m_(m), family_(family), opts_(opts) {}

  SearchResult run() {
    const auto start = Clock::now();
    if (opts_.time_budget.count() > 0) deadline_ = start + opts_.time_budget;
    SearchResult result;

    universe_ = opts_.universe.enumerate(m_);
    n_ = universe_.size();
    if (m_ > 64 || (opts_.universe.permutation_invariant() && m_ > 11))
      fail(ErrorCode::limit_exceeded, "exact search is limited to m <= 11 (got " + std::to_string(m_) + ")");
    words_per_set_ = (n_ + 63) / 64;
    vertex_words_.reserve(n_);
    for (const auto& c : universe_) vertex_words_.push_back(c.low_word());
    stats_.universe = n_;

    build_constraints();
    seed_lower_bound();
    search();

    result.stats = stats_;
    result.stats.nodes = nodes_;
    result.value = best_.size();
    Matrix w(m_);
    for (auto v : best_) w.append(universe_[v]);
    result.witness = SimpleMatrix(std::move(w));
    result.status = timed_out_ ? SearchStatus::timeout : SearchStatus::exact;
    if (auto hit = contains_any(family_, result.witness))
      fail(ErrorCode::internal, "search witness contains family member " + std::to_string(hit->first));
    result.elapsed = Clock::now() - start;
    return result;
  }

 private:
  std::size_t m_;
  const std::vector<Configuration>& family_;
  const SearchOptions& opts_;
  std::optional<Clock::time_point> deadline_;

  std::vector<BitColumn> universe_;
  std::vector<std::uint64_t> vertex_words_;
  std::size_t n_ = 0;
  std::size_t words_per_set_ = 0;

  std::vector<bool> forced_out_;
  std::vector<bool> constrained_;
  std::vector<Words> adj_;
  std::vector<std::vector<std::uint32_t>> hyper_;
  std::vector<std::vector<std::uint32_t>> hyper_of_;
  std::vector<Configuration> oracle_family_;
  std::vector<std::uint32_t> free_;

  // Search state.
  std::vector<std::uint8_t> hcount_;
  std::vector<std::uint16_t> dyn_count_;
  std::vector<Words> dyn_adj_;
  std::vector<bool> in_s_;
  std::vector<std::uint32_t> current_;
  std::vector<std::uint32_t> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  SearchStats stats_;

  void build_constraints() {
    forced_out_.assign(n_, false);
    constrained_.assign(n_, false);
    adj_.assign(n_, Words(words_per_set_, 0));
    hyper_of_.assign(n_, {});

    // Single-column members rule out columns outright.
    std::vector<const Matrix*> multi;
    for (const auto& cfg : family_) {
      const Matrix& f = cfg.matrix();
      if (f.rows() > m_) continue;
      if (f.cols() == 0) {
        // Contained in everything: only the empty matrix survives.
        std::fill(forced_out_.begin(), forced_out_.end(), true);
        continue;
      }
      if (f.cols() == 1) {
        const std::size_t ones = f.column(0).popcount();
        const std::size_t zeros = f.rows() - ones;
        for (std::size_t v = 0; v < n_; ++v) {
          const std::size_t s = universe_[v].popcount();
          if (s >= ones && m_ - s >= zeros) forced_out_[v] = true;
        }
        continue;
      }
      multi.push_back(&f);
    }
    std::vector<std::uint32_t> active;
    for (std::size_t v = 0; v < n_; ++v)
      if (!forced_out_[v]) active.push_back(static_cast<std::uint32_t>(v));
    stats_.forced_out = n_ - active.size();

    // Pairs first so larger sets containing an edge can be dropped.
    std::stable_sort(multi.begin(), multi.end(), [](const Matrix* a, const Matrix* b) { return a->cols() < b->cols(); });
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    const std::uint64_t work = static_cast<std::uint64_t>(opts_.max_constraint_sets) * 25;
    for (const Matrix* f : multi) {
      if (f->cols() > active.size()) continue;
      CopyEnumerator en(*f, m_, vertex_words_, active);
      std::size_t added = 0;
      // Sets collected before a cut-off are genuine copies and stay; the
      // member is then also checked directly during the search.
      const bool complete = en.enumerate(
          [&](const std::vector<std::uint32_t>& s) {
            if (s.size() == 2) {
              if (!test_bit(adj_[s[0]], s[1])) ++stats_.pair_sets;
              set_bit(adj_[s[0]], s[1]);
              set_bit(adj_[s[1]], s[0]);
              constrained_[s[0]] = constrained_[s[1]] = true;
              return true;
            }
            if (!seen.insert(s).second) return true;
            hyper_.push_back(s);
            return ++added < opts_.max_constraint_sets;
          },
          [&](std::uint32_t u, std::uint32_t v) { return !test_bit(adj_[u], v); }, work);
      if (!complete) oracle_family_.push_back(canonicalize(*f));
    }
    // A set may predate an edge added by a later member of the same size.
    std::vector<std::vector<std::uint32_t>> kept;
    kept.reserve(hyper_.size());
    for (auto& s : hyper_) {
      bool redundant = false;
      for (std::size_t i = 0; i < s.size() && !redundant; ++i)
        for (std::size_t j = i + 1; j < s.size() && !redundant; ++j) redundant = test_bit(adj_[s[i]], s[j]);
      if (!redundant) kept.push_back(std::move(s));
    }
    hyper_ = std::move(kept);
    for (std::size_t e = 0; e < hyper_.size(); ++e)
      for (auto v : hyper_[e]) {
        hyper_of_[v].push_back(static_cast<std::uint32_t>(e));
        constrained_[v] = true;
      }
    stats_.larger_sets = hyper_.size();
    stats_.oracle_members = oracle_family_.size();
    if (!oracle_family_.empty()) std::fill(constrained_.begin(), constrained_.end(), true);
    for (auto v : active)
      if (!constrained_[v]) free_.push_back(v);
    stats_.free_columns = free_.size();
  }

  void seed_lower_bound() {
    best_ = free_;
    if (!opts_.initial_lower_bound) return;
    const SimpleMatrix& lb = *opts_.initial_lower_bound;
    if (lb.rows() != m_) fail(ErrorCode::invalid_argument, "initial lower bound has the wrong row count");
    if (contains_any(family_, lb)) fail(ErrorCode::invalid_argument, "initial lower bound contains a family member");
    std::vector<std::uint32_t> idx;
    for (const auto& c : lb.columns()) {
      auto it = std::find(universe_.begin(), universe_.end(), c);
      if (it == universe_.end()) fail(ErrorCode::invalid_argument, "initial lower bound uses a column outside the universe");
      idx.push_back(static_cast<std::uint32_t>(it - universe_.begin()));
    }
    std::sort(idx.begin(), idx.end());
    if (idx.size() > best_.size()) best_ = idx;
  }

  static bool is_prefix(const BitColumn& c) {
    const std::size_t w = c.popcount();
    return c.low_word() == (w == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1);
  }

  void search() {
    hcount_.assign(hyper_.size(), 0);
    if (!hyper_.empty()) {
      dyn_count_.assign(n_ * n_, 0);
      dyn_adj_.assign(n_, Words(words_per_set_, 0));
    }
    in_s_.assign(n_, false);

    std::vector<std::uint32_t> branchable;
    for (std::size_t v = 0; v < n_; ++v)
      if (!forced_out_[v] && constrained_[v]) branchable.push_back(static_cast<std::uint32_t>(v));

    auto pool_after = [&](std::size_t after) {
      Words p(words_per_set_, 0);
      for (auto v : branchable)
        if (v > after || after == SIZE_MAX) set_bit(p, v);
      return p;
    };

    const bool symmetric = opts_.symmetry_pruning && opts_.universe.permutation_invariant();
    if (!symmetric) {
      dfs(pool_after(SIZE_MAX));
      return;
    }
    // Some optimum can be row-permuted so that its smallest column is a prefix
    // column; free columns are always taken, so the smallest chosen column is
    // either a constrained prefix column before the first free one, or that
    // free column itself.
    const std::size_t f0 = free_.empty() ? n_ : free_.front();
    for (auto p : branchable) {
      if (p >= f0 || timed_out_) break;
      if (!is_prefix(universe_[p])) continue;
      Words pool = pool_after(p);
      include_and_recurse(p, pool);
    }
    if (!timed_out_ && f0 < n_ && is_prefix(universe_[f0])) dfs(pool_after(f0));
  }

  bool check_deadline() {
    if (timed_out_) return true;
    if (deadline_ && (nodes_ & 1023) == 0 && Clock::now() > *deadline_) timed_out_ = true;
    return timed_out_;
  }

  void record() {
    if (current_.size() + free_.size() <= best_.size()) return;
    best_ = current_;
    best_.insert(best_.end(), free_.begin(), free_.end());
    std::sort(best_.begin(), best_.end());
  }

  std::size_t clique_cover(Words p, std::size_t stop_above) const {
    std::size_t cliques = 0;
    Words cand(words_per_set_);
    while (auto u = lowest(p)) {
      ++cliques;
      if (cliques > stop_above) return cliques;
      clear_bit(p, *u);
      for (std::size_t i = 0; i < words_per_set_; ++i)
        cand[i] = p[i] & (adj_[*u][i] | (dyn_adj_.empty() ? 0 : dyn_adj_[*u][i]));
      while (auto w = lowest(cand)) {
        clear_bit(p, *w);
        for (std::size_t i = 0; i < words_per_set_; ++i)
          cand[i] &= adj_[*w][i] | (dyn_adj_.empty() ? 0 : dyn_adj_[*w][i]);
        clear_bit(cand, *w);
      }
    }
    return cliques;
  }

  void add_dyn(std::uint32_t u, std::uint32_t w) {
    if (dyn_count_[u * n_ + w]++ == 0) {
      dyn_count_[w * n_ + u] = dyn_count_[u * n_ + w];
      set_bit(dyn_adj_[u], w);
      set_bit(dyn_adj_[w], u);
    } else {
      dyn_count_[w * n_ + u] = dyn_count_[u * n_ + w];
    }
  }

  void remove_dyn(std::uint32_t u, std::uint32_t w) {
    if (--dyn_count_[u * n_ + w] == 0) {
      clear_bit(dyn_adj_[u], w);
      clear_bit(dyn_adj_[w], u);
    }
    dyn_count_[w * n_ + u] = dyn_count_[u * n_ + w];
  }

  bool oracle_allows(std::uint32_t v) const {
    if (oracle_family_.empty()) return true;
    Matrix s(m_);
    for (auto u : current_) s.append(universe_[u]);
    return !contains_incremental(oracle_family_, SimpleMatrix(std::move(s)), universe_[v]);
  }

  void include_and_recurse(std::uint32_t v, const Words& pool) {
    if (!oracle_allows(v)) return;
    Words p = pool;
    clear_bit(p, v);
    for (std::size_t i = 0; i < words_per_set_; ++i) p[i] &= ~adj_[v][i];
    in_s_[v] = true;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> added;
    for (auto e : hyper_of_[v]) {
      const auto& set = hyper_[e];
      const std::size_t c = ++hcount_[e];
      if (c + 1 == set.size()) {
        for (auto u : set)
          if (!in_s_[u]) clear_bit(p, u);
      } else if (c + 2 == set.size()) {
        std::uint32_t pair[2];
        std::size_t k = 0;
        for (auto u : set)
          if (!in_s_[u]) pair[k++] = u;
        add_dyn(pair[0], pair[1]);
        added.emplace_back(pair[0], pair[1]);
      }
    }
    current_.push_back(v);
    dfs(std::move(p));
    current_.pop_back();
    for (auto it = added.rbegin(); it != added.rend(); ++it) remove_dyn(it->first, it->second);
    for (auto e : hyper_of_[v]) --hcount_[e];
    in_s_[v] = false;
  }

  void dfs(Words p) {
    ++nodes_;
    if (check_deadline()) return;
    const std::size_t base = current_.size() + free_.size();
    const std::size_t remaining = count(p);
    if (remaining == 0) {
      record();
      return;
    }
    if (base + remaining <= best_.size()) return;
    if (base < best_.size()) {
      const std::size_t need = best_.size() - base;  // cliques needed to beat the best
      if (clique_cover(p, need) <= need) return;
    }

    const std::uint32_t v = static_cast<std::uint32_t>(*lowest(p));
    include_and_recurse(v, p);
    if (timed_out_) return;
    clear_bit(p, v);
    dfs(std::move(p));
  }
};

}  // namespace

SearchResult forb_exact(std::size_t m, const std::vector<Configuration>& family, const SearchOptions& opts) {
  if (m < 1) fail(ErrorCode::invalid_argument, "m must be at least 1");
  return Solver(m, family, opts).run();
}

SearchResult forb_restricted(std::size_t m, const std::vector<Configuration>& family,
                             std::function<bool(std::size_t)> sum_predicate, SearchOptions opts) {
  if (opts.universe.sum_predicate) {
    auto prev = opts.universe.sum_predicate;
    opts.universe.sum_predicate = [prev, sum_predicate](std::size_t s) { return prev(s) && sum_predicate(s); };
  } else {
    opts.universe.sum_predicate = std::move(sum_predicate);
  }
  return forb_exact(m, family, opts);
}

InductionParts induction_decompose(const SimpleMatrix& a, std::size_t r) {
  if (r >= a.rows()) fail(ErrorCode::out_of_range, "row " + std::to_string(r) + " out of range");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (i != r) keep.push_back(i);
  struct Seen {
    bool zero = false;
    bool one = false;
    std::size_t first = 0;
  };
  std::map<BitColumn, Seen> seen;
  std::vector<BitColumn> order;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    BitColumn rest = a.column(j).gather(keep);
    auto [it, fresh] = seen.try_emplace(rest);
    if (fresh) {
      it->second.first = order.size();
      order.push_back(rest);
    }
    (a.column(j).test(r) ? it->second.one : it->second.zero) = true;
  }
  Matrix b(keep.size()), c(keep.size()), d(keep.size());
  for (const auto& col : order) {
    const auto& s = seen.at(col);
    (s.zero && s.one ? c : s.zero ? b : d).append(col);
  }
  return {SimpleMatrix(std::move(b)), SimpleMatrix(std::move(c)), SimpleMatrix(std::move(d))};
}

SlopeReport slope_estimate(const std::vector<Configuration>& family, std::size_t m_lo, std::size_t m_hi,
                           const SearchOptions& opts) {
  if (m_hi < m_lo || m_hi - m_lo + 1 < 3) fail(ErrorCode::invalid_argument, "slope estimate needs at least 3 points");
  SlopeReport rep;
  std::vector<double> xs, ys;
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    auto r = forb_exact(m, family, opts);
    if (r.value == 0) fail(ErrorCode::invalid_argument, "forb value 0 has no logarithm");
    rep.points.push_back({m, r.value, r.status, 0.0});
    xs.push_back(std::log(static_cast<double>(m)));
    ys.push_back(std::log(static_cast<double>(r.value)));
  }
  const double n = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  const double denom = n * sxx - sx * sx;
  rep.slope = denom == 0 ? 0.0 : (n * sxy - sx * sy) / denom;
  rep.intercept = (sy - rep.slope * sx) / n;
  for (std::size_t i = 0; i < xs.size(); ++i) rep.points[i].residual = ys[i] - (rep.intercept + rep.slope * xs[i]);
  return rep;
}

}  // namespace forbconf
