#include "forbconf/containment.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "forbconf/error.hpp"

namespace forbconf {

bool Certificate::verify(const Matrix& f, const Matrix& a) const {
  if (kind != Kind::containment) return false;
  if (row_map.size() != f.rows() || col_map.size() != f.cols()) return false;
  std::vector<bool> seen_rows(a.rows(), false);
  for (auto r : row_map) {
    if (r >= a.rows() || seen_rows[r]) return false;
    seen_rows[r] = true;
  }
  std::vector<bool> seen_cols(a.cols(), false);
  for (auto c : col_map) {
    if (c >= a.cols() || seen_cols[c]) return false;
    seen_cols[c] = true;
  }
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (std::size_t i = 0; i < f.rows(); ++i)
      if (f.at(i, j) != a.at(row_map[i], col_map[j])) return false;
  return true;
}

std::string Certificate::to_text() const {
  std::ostringstream out;
  if (kind == Kind::avoidance) {
    out << "avoidance: " << checked_universe << '\n';
    return out.str();
  }
  out << "row_map:";
  for (auto r : row_map) out << ' ' << r;
  out << "\ncol_map:";
  for (auto c : col_map) out << ' ' << c;
  out << '\n';
  return out.str();
}

namespace {

using Words = std::vector<std::uint64_t>;

std::size_t count_bits(const Words& w) {
  std::size_t n = 0;
  for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

// Injective map of the "lines" of F (rows or columns) into the lines of A.
// Items on the other axis of F are kept in groups sharing the same pattern on
// the lines mapped so far; each group carries the set of A-items with that same
// pattern. Groups have pairwise distinct patterns, so their candidate sets are
// disjoint and a simple count per group decides whether the other axis can
// still be matched.
class LineMatcher {
 public:
  LineMatcher(std::vector<std::vector<char>> f_lines, std::size_t f_items, std::vector<Words> a_lines,
              std::size_t a_items)
      : f_lines_(std::move(f_lines)),
        f_items_(f_items),
        a_lines_(std::move(a_lines)),
        a_items_(a_items),
        words_((a_items + 63) / 64) {
    a_ones_.reserve(a_lines_.size());
    for (const auto& l : a_lines_) a_ones_.push_back(count_bits(l));
    f_ones_.reserve(f_lines_.size());
    for (const auto& l : f_lines_)
      f_ones_.push_back(static_cast<std::size_t>(std::count(l.begin(), l.end(), 1)));

    order_.resize(f_lines_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      if (f_ones_[x] != f_ones_[y]) return f_ones_[x] > f_ones_[y];
      return f_lines_[x] < f_lines_[y];
    });
  }

  /// Requires the F-line `line` to be placed first and mapped to A-line `target`.
  void force_first(std::size_t line, std::size_t target) {
    auto it = std::find(order_.begin(), order_.end(), line);
    std::rotate(order_.begin(), it, it + 1);
    // Keep copies of the forced line right behind it so the increasing-index
    // rule for equal lines still applies.
    std::stable_partition(order_.begin() + 1, order_.end(),
                          [&](std::size_t x) { return f_lines_[x] == f_lines_[line]; });
    forced_ = target;
  }

  bool run() {
    const std::size_t k = f_lines_.size();
    equal_prev_.assign(k, false);
    for (std::size_t d = 1; d < k; ++d) equal_prev_[d] = f_lines_[order_[d]] == f_lines_[order_[d - 1]];
    line_map_.assign(k, 0);
    used_.assign(a_lines_.size(), false);
    levels_.assign(k + 1, {});
    Group root;
    root.members.resize(f_items_);
    std::iota(root.members.begin(), root.members.end(), 0);
    root.cand.assign(words_, ~std::uint64_t{0});
    if (words_ > 0 && a_items_ % 64 != 0) root.cand.back() = (std::uint64_t{1} << (a_items_ % 64)) - 1;
    if (f_items_ > a_items_) return false;
    levels_[0].push_back(std::move(root));
    return descend(0);
  }

  const std::vector<std::size_t>& line_map() const { return line_map_; }
  const std::vector<std::size_t>& item_map() const { return item_map_; }

 private:
  struct Group {
    std::vector<std::size_t> members;
    Words cand;
  };

  std::vector<std::vector<char>> f_lines_;
  std::size_t f_items_;
  std::vector<Words> a_lines_;
  std::size_t a_items_;
  std::size_t words_;
  std::vector<std::size_t> a_ones_;
  std::vector<std::size_t> f_ones_;
  std::vector<std::size_t> order_;
  std::vector<bool> equal_prev_;
  std::optional<std::size_t> forced_;

  std::vector<std::size_t> line_map_;
  std::vector<std::size_t> item_map_;
  std::vector<bool> used_;
  std::vector<std::vector<Group>> levels_;

  void finish() {
    item_map_.assign(f_items_, 0);
    for (const auto& g : levels_[f_lines_.size()]) {
      std::size_t w = 0;
      std::uint64_t bits = g.cand.empty() ? 0 : g.cand[0];
      for (auto member : g.members) {
        while (bits == 0) bits = g.cand[++w];
        item_map_[member] = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  bool descend(std::size_t depth) {
    if (depth == f_lines_.size()) {
      finish();
      return true;
    }
    const std::size_t line = order_[depth];
    const auto& pattern = f_lines_[line];
    const std::size_t need_ones = f_ones_[line];
    const std::size_t need_zeros = f_items_ - need_ones;

    // Member split depends only on the F-line, so do it once per level.
    struct Split {
      std::vector<std::size_t> zeros, ones;
    };
    std::vector<Split> splits;
    splits.reserve(levels_[depth].size());
    for (const auto& g : levels_[depth]) {
      Split s;
      for (auto x : g.members) (pattern[x] ? s.ones : s.zeros).push_back(x);
      splits.push_back(std::move(s));
    }

    std::size_t lo = 0;
    std::size_t hi = a_lines_.size();
    if (depth == 0 && forced_) {
      lo = *forced_;
      hi = lo + 1;
    }
    if (equal_prev_[depth]) lo = std::max(lo, line_map_[order_[depth - 1]] + 1);

    auto& next = levels_[depth + 1];
    for (std::size_t a = lo; a < hi; ++a) {
      if (used_[a]) continue;
      if (a_ones_[a] < need_ones || a_items_ - a_ones_[a] < need_zeros) continue;
      const Words& al = a_lines_[a];
      next.clear();
      bool ok = true;
      for (std::size_t gi = 0; gi < levels_[depth].size() && ok; ++gi) {
        const auto& g = levels_[depth][gi];
        for (int bit = 0; bit < 2 && ok; ++bit) {
          const auto& members = bit ? splits[gi].ones : splits[gi].zeros;
          if (members.empty()) continue;
          Group h;
          h.cand.resize(words_);
          std::size_t count = 0;
          for (std::size_t w = 0; w < words_; ++w) {
            h.cand[w] = g.cand[w] & (bit ? al[w] : ~al[w]);
            count += static_cast<std::size_t>(std::popcount(h.cand[w]));
          }
          if (count < members.size()) {
            ok = false;
            break;
          }
          h.members = members;
          next.push_back(std::move(h));
        }
      }
      if (!ok) continue;
      used_[a] = true;
      line_map_[line] = a;
      if (descend(depth + 1)) return true;
      used_[a] = false;
    }
    return false;
  }
};

double falling(std::size_t n, std::size_t k) {
  double p = 1.0;
  for (std::size_t i = 0; i < k; ++i) p *= static_cast<double>(n - i);
  return p;
}

std::vector<std::vector<char>> f_rows(const Matrix& f) {
  std::vector<std::vector<char>> out(f.rows(), std::vector<char>(f.cols(), 0));
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) out[i][j] = f.at(i, j) ? 1 : 0;
  return out;
}

std::vector<std::vector<char>> f_cols(const Matrix& f) {
  std::vector<std::vector<char>> out(f.cols(), std::vector<char>(f.rows(), 0));
  for (std::size_t j = 0; j < f.cols(); ++j)
    for (std::size_t i = 0; i < f.rows(); ++i) out[j][i] = f.at(i, j) ? 1 : 0;
  return out;
}

std::vector<Words> a_rows(const Matrix& a) {
  const std::size_t words = (a.cols() + 63) / 64;
  std::vector<Words> out(a.rows(), Words(words, 0));
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& col = a.column(j);
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (col.test(i)) out[i][j / 64] |= std::uint64_t{1} << (j % 64);
  }
  return out;
}

std::vector<Words> a_cols(const Matrix& a) {
  std::vector<Words> out;
  out.reserve(a.cols());
  for (const auto& col : a.columns()) {
    Words w(col.word_count());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = col.word(i);
    out.push_back(std::move(w));
  }
  return out;
}

std::optional<Certificate> trivial_case(const Matrix& f, const Matrix& a) {
  if (f.rows() > a.rows() || f.cols() > a.cols()) return Certificate::avoidance("size");
  if (f.rows() == 0 || f.cols() == 0) {
    Certificate c;
    c.row_map.resize(f.rows());
    c.col_map.resize(f.cols());
    std::iota(c.row_map.begin(), c.row_map.end(), 0);
    std::iota(c.col_map.begin(), c.col_map.end(), 0);
    return c;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Certificate> contains(const Matrix& f, const Matrix& a, ContainStrategy strategy) {
  if (auto t = trivial_case(f, a)) {
    if (t->kind == Certificate::Kind::avoidance) return std::nullopt;
    return t;
  }
  if (strategy == ContainStrategy::automatic) {
    strategy = falling(a.cols(), f.cols()) < falling(a.rows(), f.rows()) ? ContainStrategy::columns
                                                                         : ContainStrategy::rows;
  }
  Certificate cert;
  if (strategy == ContainStrategy::rows) {
    LineMatcher lm(f_rows(f), f.cols(), a_rows(a), a.cols());
    if (!lm.run()) return std::nullopt;
    cert.row_map = lm.line_map();
    cert.col_map = lm.item_map();
  } else {
    LineMatcher lm(f_cols(f), f.rows(), a_cols(a), a.rows());
    if (!lm.run()) return std::nullopt;
    cert.col_map = lm.line_map();
    cert.row_map = lm.item_map();
  }
  return cert;
}

std::optional<FamilyHit> contains_any(const std::vector<Configuration>& family, const Matrix& a) {
  for (std::size_t i = 0; i < family.size(); ++i)
    if (auto c = contains(family[i].matrix(), a)) return FamilyHit{i, std::move(*c)};
  return std::nullopt;
}

std::optional<FamilyHit> contains_incremental(const std::vector<Configuration>& family, const SimpleMatrix& a,
                                              const BitColumn& c) {
  if (c.width() != a.rows()) fail(ErrorCode::invalid_argument, "appended column has the wrong width");
  for (const auto& col : a.columns())
    if (col == c) fail(ErrorCode::precondition, "appended column is already a column of A");

  // The new column goes first so that copies of the forced F-column can still
  // be required to land on increasing indices.
  std::vector<Words> lines;
  lines.reserve(a.cols() + 1);
  {
    Words w(c.word_count());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = c.word(i);
    lines.push_back(std::move(w));
  }
  for (auto& w : a_cols(a)) lines.push_back(std::move(w));
  auto unshift = [&](std::size_t idx) { return idx == 0 ? a.cols() : idx - 1; };

  for (std::size_t fi = 0; fi < family.size(); ++fi) {
    const Matrix& f = family[fi].matrix();
    if (f.rows() > a.rows() || f.cols() > a.cols() + 1 || f.cols() == 0) continue;
    const auto fc = f_cols(f);
    std::vector<std::vector<char>> tried;
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (std::find(tried.begin(), tried.end(), fc[j]) != tried.end()) continue;
      tried.push_back(fc[j]);
      LineMatcher lm(fc, f.rows(), lines, a.rows());
      lm.force_first(j, 0);
      if (!lm.run()) continue;
      Certificate cert;
      cert.row_map = lm.item_map();
      cert.col_map.reserve(f.cols());
      for (auto idx : lm.line_map()) cert.col_map.push_back(unshift(idx));
      return FamilyHit{fi, std::move(cert)};
    }
  }
  return std::nullopt;
}

namespace {

class NaiveSearch {
 public:
  NaiveSearch(const Matrix& f, const Matrix& a) : f_(f), a_(a) {}

  std::optional<Certificate> run() {
    rows_.clear();
    row_used_.assign(a_.rows(), false);
    if (pick_row()) return cert_;
    return std::nullopt;
  }

 private:
  const Matrix& f_;
  const Matrix& a_;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> cols_;
  std::vector<bool> row_used_;
  std::vector<bool> col_used_;
  Certificate cert_;

  bool pick_row() {
    if (rows_.size() == f_.rows()) {
      cols_.clear();
      col_used_.assign(a_.cols(), false);
      return pick_col();
    }
    for (std::size_t r = 0; r < a_.rows(); ++r) {
      if (row_used_[r]) continue;
      row_used_[r] = true;
      rows_.push_back(r);
      if (pick_row()) return true;
      rows_.pop_back();
      row_used_[r] = false;
    }
    return false;
  }

  bool pick_col() {
    const std::size_t j = cols_.size();
    if (j == f_.cols()) {
      cert_.row_map = rows_;
      cert_.col_map = cols_;
      return true;
    }
    for (std::size_t c = 0; c < a_.cols(); ++c) {
      if (col_used_[c]) continue;
      bool match = true;
      for (std::size_t i = 0; i < f_.rows() && match; ++i) match = f_.at(i, j) == a_.at(rows_[i], c);
      if (!match) continue;
      col_used_[c] = true;
      cols_.push_back(c);
      if (pick_col()) return true;
      cols_.pop_back();
      col_used_[c] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Certificate> naive_contains(const Matrix& f, const Matrix& a) {
  if (f.rows() > a.rows() || f.cols() > a.cols()) return std::nullopt;
  return NaiveSearch(f, a).run();
}

}  // namespace forbconf
