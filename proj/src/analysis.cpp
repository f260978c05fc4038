#include "forbconf/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "forbconf/constructions.hpp"
#include "forbconf/error.hpp"

namespace forbconf {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

struct RowCounts {
  std::size_t zeros = 0;
  std::size_t ones = 0;
};

RowCounts count_row(const Matrix& m, std::size_t row, const std::vector<std::size_t>& cols) {
  RowCounts c;
  for (auto j : cols) (m.at(row, j) ? c.ones : c.zeros)++;
  return c;
}

RowClass class_of(RowCounts c, std::size_t t) {
  if (c.ones == 0) return RowClass::identically0;
  if (c.zeros == 0) return RowClass::identically1;
  if (c.zeros < t) return RowClass::sparse;
  return RowClass::dense;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Row sets hosting t·I_k. A set S works iff each row i of S has at least t
// columns with a 1 in row i and 0 in the rest of S; such columns are private
// to i, so this count is the whole condition. Failing sets have no working
// supersets, which makes plain backtracking enough.
class TIkRows {
 public:
  TIkRows(const Matrix& a, std::size_t t) : a_(a), t_(t) {
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a.row_sum(r) >= t) cand_.push_back(r);
  }

  std::vector<std::size_t> best() {
    best_.clear();
    collect_ = false;
    cur_.clear();
    dfs(0);
    return best_;
  }

  // Every working set of size k, in lexicographic order, up to `limit`.
  std::vector<std::vector<std::size_t>> all_of_size(std::size_t k, std::size_t limit) {
    collect_ = true;
    target_ = k;
    limit_ = limit;
    found_.clear();
    cur_.clear();
    dfs(0);
    return found_;
  }

  std::vector<std::size_t> private_columns(const std::vector<std::size_t>& set, std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < a_.cols(); ++c) {
      if (!a_.at(set[i], c)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < set.size() && ok; ++j)
        if (j != i && a_.at(set[j], c)) ok = false;
      if (ok) out.push_back(c);
    }
    return out;
  }

 private:
  const Matrix& a_;
  std::size_t t_;
  std::vector<std::size_t> cand_;
  std::vector<std::size_t> cur_;
  std::vector<std::size_t> best_;
  bool collect_ = false;
  std::size_t target_ = 0;
  std::size_t limit_ = 0;
  std::vector<std::vector<std::size_t>> found_;

  bool works(const std::vector<std::size_t>& set) const {
    for (std::size_t i = 0; i < set.size(); ++i) {
      std::size_t n = 0;
      for (std::size_t c = 0; c < a_.cols() && n < t_; ++c) {
        if (!a_.at(set[i], c)) continue;
        bool ok = true;
        for (std::size_t j = 0; j < set.size() && ok; ++j)
          if (j != i && a_.at(set[j], c)) ok = false;
        if (ok) ++n;
      }
      if (n < t_) return false;
    }
    return true;
  }

  void dfs(std::size_t pos) {
    if (collect_) {
      if (found_.size() >= limit_) return;
      if (cur_.size() == target_) {
        found_.push_back(cur_);
        return;
      }
      if (cur_.size() + (cand_.size() - pos) < target_) return;
    } else {
      if (cur_.size() > best_.size()) best_ = cur_;
      if (cur_.size() + (cand_.size() - pos) <= best_.size()) return;
    }
    for (std::size_t p = pos; p < cand_.size(); ++p) {
      cur_.push_back(cand_[p]);
      if (works(cur_)) dfs(p + 1);
      cur_.pop_back();
      if (!collect_ && cur_.size() + (cand_.size() - p - 1) <= best_.size()) return;
    }
  }
};

AvoidingRows avoiding_base(const Matrix& b, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  // Each row has at most one 0 among `cols`, so first zero rows are distinct.
  AvoidingRows out;
  for (auto c : cols) {
    for (auto r : rows)
      if (!b.at(r, c)) {
        out.rows.push_back(r);
        out.cols.push_back(c);
        break;
      }
  }
  return out;
}

AvoidingRows avoiding_rec(const Matrix& b, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                          std::size_t t) {
  if (t <= 2) return avoiding_base(b, rows, cols);
  std::vector<std::size_t> b1, b2;
  std::vector<bool> taken(cols.size(), false);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (taken[i]) continue;
    taken[i] = true;
    b1.push_back(cols[i]);
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      if (taken[j]) continue;
      for (auto r : rows)
        if (!b.at(r, cols[i]) && !b.at(r, cols[j])) {
          taken[j] = true;
          b2.push_back(cols[j]);
          break;
        }
    }
  }
  if (2 * b1.size() >= cols.size()) return avoiding_base(b, rows, b1);
  // Only rows with a 0 under B1 are kept. Each of them spends one of its
  // zeros there, and every B2 column still has a 0 among them.
  std::vector<std::size_t> kept;
  for (auto r : rows)
    for (auto c : b1)
      if (!b.at(r, c)) {
        kept.push_back(r);
        break;
      }
  return avoiding_rec(b, kept, b2, t - 1);
}

}  // namespace

const char* to_string(RowClass c) {
  switch (c) {
    case RowClass::identically0: return "identically0";
    case RowClass::identically1: return "identically1";
    case RowClass::sparse: return "sparse";
    case RowClass::dense: return "dense";
  }
  return "?";
}

std::vector<RowClass> classify_rows(const Matrix& m, const std::vector<std::size_t>& cols, std::size_t t) {
  if (t < 2) fail(ErrorCode::invalid_argument, "classify_rows: t must be at least 2");
  for (auto j : cols)
    if (j >= m.cols()) fail(ErrorCode::out_of_range, "classify_rows: column " + std::to_string(j) + " out of range");
  std::vector<RowClass> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(class_of(count_row(m, r, cols), t));
  return out;
}

std::vector<bool> identified_columns(const Matrix& m, const std::vector<std::size_t>& cols, std::size_t t) {
  const auto classes = classify_rows(m, cols, t);
  std::vector<bool> out(cols.size(), false);
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t r = 0; r < m.rows() && !out[i]; ++r)
      if (classes[r] == RowClass::sparse && !m.at(r, cols[i])) out[i] = true;
  return out;
}

AvoidingRows avoiding_rows(const Matrix& b, std::size_t t) {
  if (t < 2) fail(ErrorCode::invalid_argument, "avoiding_rows: t must be at least 2");
  for (std::size_t r = 0; r < b.rows(); ++r) {
    std::size_t z = 0;
    for (std::size_t c = 0; c < b.cols(); ++c) z += !b.at(r, c);
    if (z >= t)
      fail(ErrorCode::precondition, "avoiding_rows: row " + std::to_string(r) + " has " + std::to_string(z) +
                                        " zeros, needs fewer than " + std::to_string(t));
  }
  for (std::size_t c = 0; c < b.cols(); ++c)
    if (b.column(c).zeros() == 0) fail(ErrorCode::precondition, "avoiding_rows: column " + std::to_string(c) + " has no zero");
  return avoiding_rec(b, all_indices(b.rows()), all_indices(b.cols()), t);
}

// ---------------------------------------------------------------------------

bool Q9TypePartition::verify(const Matrix& a) const {
  std::vector<std::size_t> tcols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.column(j).popcount() == t) tcols.push_back(j);
  std::vector<std::size_t> sorted_cols = columns;
  std::sort(sorted_cols.begin(), sorted_cols.end());
  if (sorted_cols != tcols) return false;
  if (a_rows.size() != columns.size()) return false;
  std::vector<std::size_t> all = a_rows;
  all.insert(all.end(), b_rows.begin(), b_rows.end());
  all.insert(all.end(), c_rows.begin(), c_rows.end());
  std::sort(all.begin(), all.end());
  if (all != all_indices(a.rows())) return false;
  // Expected block display, rows in the order A_t, B_t, C_t.
  const std::size_t n = columns.size();
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s(n, type == Q9Type::type1 ? '0' : '1');
    s[i] = type == Q9Type::type1 ? '1' : '0';
    rows.push_back(s);
  }
  for (std::size_t i = 0; i < b_rows.size(); ++i) rows.emplace_back(n, '1');
  for (std::size_t i = 0; i < c_rows.size(); ++i) rows.emplace_back(n, '0');
  std::vector<std::size_t> order = a_rows;
  order.insert(order.end(), b_rows.begin(), b_rows.end());
  order.insert(order.end(), c_rows.begin(), c_rows.end());
  if (n == 0) return true;
  return restrict(a, order, columns) == Matrix::from_rows(rows);
}

std::string Q9TypePartition::to_text() const {
  std::ostringstream out;
  out << "t " << t << " type " << (type == Q9Type::type1 ? 1 : 2) << '\n';
  out << "A_t: " << join(a_rows) << '\n';
  out << "B_t: " << join(b_rows) << '\n';
  out << "C_t: " << join(c_rows) << '\n';
  out << "columns: " << join(columns) << '\n';
  return out.str();
}

Q9Classification q9_classify(const SimpleMatrix& a, std::size_t t) {
  const std::size_t m = a.rows();
  if (t < 2 || t + 1 > m)
    fail(ErrorCode::invalid_argument, "q9_classify: need 2 <= t <= m-1, got t=" + std::to_string(t) + " m=" + std::to_string(m));
  Q9Classification out;
  out.partition.t = t;
  if (auto cert = contains(catalog("Q9").matrix, a)) {
    out.outcome = Q9Classification::Outcome::refuted;
    out.refutation = std::move(cert);
    return out;
  }
  std::vector<std::size_t> tcols;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.column(j).popcount() == t) tcols.push_back(j);
  if (tcols.empty()) {
    out.partition.c_rows = all_indices(m);
    return out;
  }

  std::vector<std::size_t> ones_rows, zero_rows, mixed;
  for (std::size_t r = 0; r < m; ++r) {
    const auto c = count_row(a, r, tcols);
    if (c.zeros == 0) ones_rows.push_back(r);
    else if (c.ones == 0) zero_rows.push_back(r);
    else mixed.push_back(r);
  }

  // A type is a perfect pairing of the mixed rows with the t-columns, each
  // pair marked by the row's unique 1 (type1) or unique 0 (type2).
  auto try_type = [&](Q9Type type) -> bool {
    const bool mark = type == Q9Type::type1;
    Q9TypePartition p;
    p.t = t;
    p.type = type;
    p.b_rows = ones_rows;
    p.c_rows = zero_rows;
    if (tcols.size() == 1) {
      // A single column: A_t is one row carrying the mark.
      auto& pool = mark ? p.b_rows : p.c_rows;
      if (pool.empty()) return false;
      p.a_rows = {pool.front()};
      pool.erase(pool.begin());
      p.columns = tcols;
    } else {
      if (mixed.size() != tcols.size()) return false;
      std::vector<bool> used(tcols.size(), false);
      for (auto r : mixed) {
        std::size_t hit = tcols.size(), n = 0;
        for (std::size_t i = 0; i < tcols.size(); ++i)
          if (a.matrix().at(r, tcols[i]) == mark) {
            hit = i;
            ++n;
          }
        if (n != 1 || used[hit]) return false;
        used[hit] = true;
        p.a_rows.push_back(r);
        p.columns.push_back(tcols[hit]);
      }
    }
    std::sort(p.b_rows.begin(), p.b_rows.end());
    std::sort(p.c_rows.begin(), p.c_rows.end());
    if (!p.verify(a)) return false;
    out.partition = std::move(p);
    return true;
  };
  if (try_type(Q9Type::type1) || try_type(Q9Type::type2)) return out;
  out.outcome = Q9Classification::Outcome::unclassified;
  return out;
}

// ---------------------------------------------------------------------------

TIkWitness find_tIk(const Matrix& a, std::size_t t) {
  if (t < 1) fail(ErrorCode::invalid_argument, "find_tIk: t must be at least 1");
  TIkRows search(a, t);
  TIkWitness w;
  w.rows = search.best();
  w.k = w.rows.size();
  for (std::size_t i = 0; i < w.k; ++i) {
    auto cols = search.private_columns(w.rows, i);
    cols.resize(t);
    w.columns.push_back(std::move(cols));
  }
  return w;
}

std::size_t StabilityLayer::size() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

double StabilityDecomposition::ratio() const {
  std::size_t kept = 0;
  for (const auto& l : layers) kept += l.size();
  return kept == 0 ? 0.0 : static_cast<double>(total_columns) / static_cast<double>(kept);
}

std::string StabilityDecomposition::to_text() const {
  std::ostringstream out;
  char ratio_buf[32];
  std::snprintf(ratio_buf, sizeof ratio_buf, "%.3f", ratio());
  out << "t " << t << " columns " << total_columns << " layers " << layers.size() << " discarded " << discarded
      << " ratio " << ratio_buf << '\n';
  for (std::size_t j = 0; j < layers.size(); ++j) {
    const auto& l = layers[j];
    out << "layer " << j + 1 << " k " << l.k << " base " << join(l.base_rows) << '\n';
    out << "  rows " << join(l.rows) << '\n';
    std::vector<std::size_t> sizes;
    for (const auto& g : l.groups) sizes.push_back(g.size());
    out << "  groups " << join(sizes) << '\n';
    out << "  dropped low_rows " << l.low_rows << " dense_rows " << l.dense_rows << " bad " << l.bad_columns
        << " unidentified " << l.unidentified_columns << " overlapping " << l.overlapping_columns << '\n';
  }
  out << "condition1 " << (condition1 ? "ok" : "FAIL") << " condition2 " << (condition2 ? "ok" : "FAIL")
      << " condition3 " << (condition3 ? "ok" : "FAIL") << '\n';
  for (const auto& v : violations) out << "  " << v << '\n';
  return out.str();
}

StabilityDecomposition q3_stability_decompose(const SimpleMatrix& a, std::size_t t, const StabilityParams& params) {
  if (t < 2) fail(ErrorCode::invalid_argument, "q3_stability_decompose: t must be at least 2");
  if (auto cert = contains(q3t(t).matrix(), a))
    fail(ErrorCode::precondition, "q3_stability_decompose: A contains Q3(" + std::to_string(t) + ")\n" + cert->to_text());

  const Matrix& am = a;
  const std::size_t m = am.rows();
  const std::size_t low_ones = params.low_ones ? params.low_ones : 3 * t - 2;
  StabilityDecomposition d;
  d.t = t;
  d.total_columns = am.cols();

  std::vector<std::size_t> cur = all_indices(am.cols());
  while (!cur.empty()) {
    StabilityLayer layer;
    std::vector<std::size_t> active, low;
    for (std::size_t r = 0; r < m; ++r) (count_row(am, r, cur).ones < low_ones ? low : active).push_back(r);
    layer.low_rows = low.size();

    const Matrix sub = restrict(am, active, cur);
    TIkRows search(sub, t);
    const std::size_t k = search.best().size();
    if (k == 0) break;

    // Among maximum row sets prefer the one leaving the fewest columns for the next layer.
    std::vector<std::size_t> chosen;
    std::size_t fewest = cur.size() + 1;
    for (const auto& set : search.all_of_size(k, params.max_candidates)) {
      std::size_t left = 0;
      for (std::size_t c = 0; c < sub.cols(); ++c) {
        bool hit = false;
        for (auto r : set) hit = hit || sub.at(r, c);
        left += !hit;
      }
      if (left < fewest) {
        fewest = left;
        chosen = set;
      }
    }
    layer.k = k;
    for (auto r : chosen) layer.base_rows.push_back(active[r]);

    layer.groups.assign(k, {});
    std::vector<std::size_t> next;
    std::vector<int> group_of(am.cols(), -1);
    for (auto c : cur) {
      std::size_t hits = 0, which = 0;
      for (std::size_t i = 0; i < k; ++i)
        if (am.at(layer.base_rows[i], c)) {
          ++hits;
          which = i;
        }
      if (hits == 0) next.push_back(c);
      else if (hits == 1) {
        layer.groups[which].push_back(c);
        group_of[c] = static_cast<int>(which);
      } else ++layer.overlapping_columns;
    }

    std::set<std::size_t> base(layer.base_rows.begin(), layer.base_rows.end());
    std::vector<std::size_t> others;
    for (auto r : active)
      if (!base.count(r)) others.push_back(r);

    // Rows dense on some group, and the columns they make bad.
    std::set<std::size_t> dense, bad;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<std::size_t> outside;
      for (auto c : cur)
        if (group_of[c] != static_cast<int>(i)) outside.push_back(c);
      for (auto r : others) {
        if (class_of(count_row(am, r, layer.groups[i]), t) != RowClass::dense) continue;
        dense.insert(r);
        if (count_row(am, r, outside).zeros == 0) continue;
        for (auto c : outside)
          if (am.at(r, c)) bad.insert(c);
      }
    }
    layer.dense_rows = dense.size();
    for (auto r : others)
      if (!dense.count(r)) layer.rows.push_back(r);

    std::set<std::size_t> low_hit;
    for (auto c : cur)
      for (auto r : low)
        if (am.at(r, c)) {
          low_hit.insert(c);
          break;
        }

    std::size_t removed_bad = 0;
    for (auto& g : layer.groups) {
      std::vector<std::size_t> keep;
      for (auto c : g) {
        if (bad.count(c) || low_hit.count(c)) ++removed_bad;
        else keep.push_back(c);
      }
      // Columns no sparse row identifies are dropped as well. Row classes
      // depend on the group, so repeat until nothing more drops.
      const Matrix rows_only = restrict(am, layer.rows, all_indices(am.cols()));
      for (bool dropped = true; dropped;) {
        const auto ident = identified_columns(rows_only, keep, t);
        std::vector<std::size_t> still;
        for (std::size_t i = 0; i < keep.size(); ++i) {
          if (ident[i]) still.push_back(keep[i]);
          else ++layer.unidentified_columns;
        }
        dropped = still.size() != keep.size();
        keep = std::move(still);
      }
      g = std::move(keep);
    }
    layer.bad_columns = removed_bad;
    d.discarded += layer.overlapping_columns + layer.bad_columns + layer.unidentified_columns;
    d.layers.push_back(std::move(layer));
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  std::size_t kept = 0;
  for (const auto& l : d.layers) kept += l.size();
  d.discarded = d.total_columns - kept;
  check_stability(am, d);
  return d;
}

void check_stability(const Matrix& a, StabilityDecomposition& d) {
  d.violations.clear();
  d.condition1 = d.condition2 = d.condition3 = true;
  const double layer_cap = std::floor(std::log2(static_cast<double>(std::max<std::size_t>(a.rows(), 1)))) + 1.0;
  if (static_cast<double>(d.layers.size()) > layer_cap) {
    d.condition1 = false;
    d.violations.push_back("condition1: " + std::to_string(d.layers.size()) + " layers");
  }
  for (std::size_t j = 0; j + 1 < d.layers.size(); ++j)
    if (2 * d.layers[j + 1].k > d.layers[j].k) {
      d.condition1 = false;
      d.violations.push_back("condition1: k" + std::to_string(j + 2) + "=" + std::to_string(d.layers[j + 1].k) +
                             " exceeds half of k" + std::to_string(j + 1) + "=" + std::to_string(d.layers[j].k));
    }

  std::set<std::size_t> seen;
  for (std::size_t j = 0; j < d.layers.size(); ++j) {
    const auto& l = d.layers[j];
    const std::string where = "layer " + std::to_string(j + 1);
    if (l.groups.size() != l.k || l.base_rows.size() != l.k) {
      d.condition2 = false;
      d.violations.push_back("condition2: " + where + " has mismatched group count");
      continue;
    }
    for (std::size_t i = 0; i < l.k; ++i)
      for (auto c : l.groups[i]) {
        if (!seen.insert(c).second) {
          d.condition2 = false;
          d.violations.push_back("condition2: column " + std::to_string(c) + " used twice");
        }
        for (std::size_t q = 0; q < l.k; ++q)
          if (a.at(l.base_rows[q], c) != (q == i)) {
            d.condition2 = false;
            d.violations.push_back("condition2: " + where + " column " + std::to_string(c) + " is not identity column " +
                                   std::to_string(i));
            break;
          }
      }

    const Matrix rows_only = restrict(a, l.rows, all_indices(a.cols()));
    for (std::size_t i = 0; i < l.k; ++i) {
      const auto classes = classify_rows(rows_only, l.groups[i], d.t);
      for (std::size_t r = 0; r < classes.size(); ++r)
        if (classes[r] == RowClass::dense) {
          d.condition3 = false;
          d.violations.push_back("condition3: " + where + " row " + std::to_string(l.rows[r]) + " dense on group " +
                                 std::to_string(i));
        }
      const auto ident = identified_columns(rows_only, l.groups[i], d.t);
      for (std::size_t c = 0; c < ident.size(); ++c)
        if (!ident[c]) {
          d.condition3 = false;
          d.violations.push_back("condition3: " + where + " column " + std::to_string(l.groups[i][c]) +
                                 " not identified");
        }
    }
  }
}

}  // namespace forbconf
