#include "forbconf/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "forbconf/error.hpp"

namespace forbconf {

Matrix::Matrix(std::size_t rows, std::vector<BitColumn> columns) : rows_(rows), columns_(std::move(columns)) {
  for (const auto& c : columns_)
    if (c.width() != rows_) fail(ErrorCode::invalid_argument, "column width does not match row count");
}

Matrix Matrix::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty()) return Matrix(0);
  const std::size_t n = rows.front().size();
  std::vector<BitColumn> cols(n, BitColumn(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != n) fail(ErrorCode::parse_error, "matrix rows have different lengths");
    for (std::size_t c = 0; c < n; ++c) {
      const char ch = rows[r][c];
      if (ch == '1') {
        cols[c].set(r);
      } else if (ch != '0') {
        fail(ErrorCode::parse_error, std::string("unexpected character '") + ch + "' in matrix row");
      }
    }
  }
  return Matrix(rows.size(), std::move(cols));
}

namespace {

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::string_view trim(std::string_view s) {
  s = trim_right(s);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      if (pos < text.size()) lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

std::vector<Matrix> Matrix::parse_all(std::string_view text) {
  std::vector<Matrix> out;
  std::vector<std::string> block;
  auto flush = [&] {
    if (!block.empty()) out.push_back(from_rows(block));
    block.clear();
  };
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;
    block.emplace_back(line);
  }
  flush();
  return out;
}

Matrix Matrix::parse_text(std::string_view text) {
  std::vector<std::string> block;
  for (auto line : split_lines(text)) {
    line = trim(line);
    if (line.empty()) {
      if (block.empty()) continue;
      break;
    }
    if (line.front() == '#') continue;
    block.emplace_back(line);
  }
  if (block.empty()) fail(ErrorCode::parse_error, "no matrix rows found");
  return from_rows(block);
}

void Matrix::append(BitColumn column) {
  if (column.width() != rows_) fail(ErrorCode::invalid_argument, "column width does not match row count");
  columns_.push_back(std::move(column));
}

std::size_t Matrix::row_sum(std::size_t row) const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.test(row) ? 1 : 0;
  return n;
}

std::string Matrix::row_string(std::size_t row) const {
  std::string s(columns_.size(), '0');
  for (std::size_t j = 0; j < columns_.size(); ++j)
    if (columns_[j].test(row)) s[j] = '1';
  return s;
}

bool Matrix::is_simple() const {
  std::unordered_set<BitColumn, BitColumnHash> seen;
  for (const auto& c : columns_)
    if (!seen.insert(c).second) return false;
  return true;
}

std::string Matrix::to_text() const {
  if (columns_.empty()) return {};
  std::string out;
  out.reserve(rows_ * (columns_.size() + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    out += row_string(r);
    out += '\n';
  }
  return out;
}

SimpleMatrix::SimpleMatrix(Matrix m) : inner_(std::move(m)) {
  if (!inner_.is_simple()) fail(ErrorCode::invalid_argument, "matrix has repeated columns");
}

Matrix complement(const Matrix& m) {
  std::vector<BitColumn> cols;
  cols.reserve(m.cols());
  for (const auto& c : m.columns()) cols.push_back(c.complemented());
  return Matrix(m.rows(), std::move(cols));
}

SimpleMatrix simplify(const Matrix& m) {
  std::unordered_set<BitColumn, BitColumnHash> seen;
  Matrix out(m.rows());
  for (const auto& c : m.columns())
    if (seen.insert(c).second) out.append(c);
  return SimpleMatrix(std::move(out));
}

namespace {

void check_indices(const std::vector<std::size_t>& idx, std::size_t bound, const char* what) {
  std::vector<bool> seen(bound, false);
  for (auto i : idx) {
    if (i >= bound) fail(ErrorCode::out_of_range, std::string(what) + " index " + std::to_string(i) + " out of range");
    if (seen[i]) fail(ErrorCode::invalid_argument, std::string("repeated ") + what + " index " + std::to_string(i));
    seen[i] = true;
  }
}

}  // namespace

Matrix restrict(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  check_indices(rows, m.rows(), "row");
  check_indices(cols, m.cols(), "column");
  Matrix out(rows.size());
  for (auto j : cols) out.append(m.column(j).gather(rows));
  return out;
}

Matrix permute(const Matrix& m, const std::vector<std::size_t>& row_perm, const std::vector<std::size_t>& col_perm) {
  if (row_perm.size() != m.rows() || col_perm.size() != m.cols())
    fail(ErrorCode::invalid_argument, "permutation size mismatch");
  return restrict(m, row_perm, col_perm);
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) fail(ErrorCode::invalid_argument, "stack needs equal column counts");
  Matrix out(top.rows() + bottom.rows());
  for (std::size_t j = 0; j < top.cols(); ++j) out.append(top.column(j).stacked(bottom.column(j)));
  return out;
}

Matrix concat(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) fail(ErrorCode::invalid_argument, "concat needs equal row counts");
  Matrix out = left;
  for (const auto& c : right.columns()) out.append(c);
  return out;
}

Matrix repeat_columns(const Matrix& m, std::size_t times) {
  Matrix out(m.rows());
  for (const auto& c : m.columns())
    for (std::size_t i = 0; i < times; ++i) out.append(c);
  return out;
}

SimpleMatrix select_by_sum(const SimpleMatrix& a, const std::function<bool(std::size_t)>& predicate) {
  Matrix out(a.rows());
  for (const auto& c : a.columns())
    if (predicate(c.popcount())) out.append(c);
  return SimpleMatrix(std::move(out));
}

namespace {

// Branch-and-bound over row orders. Sorting columns lexicographically (row 0
// most significant) means the first d rows of the sorted matrix depend only on
// the first d chosen rows, so row-major keys can be minimised one row at a time
// and branches whose prefix exceeds the best known prefix are cut.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Matrix& m) : k_(m.rows()), l_(m.cols()), bits_(k_, std::vector<char>(l_, 0)) {
    for (std::size_t r = 0; r < k_; ++r)
      for (std::size_t c = 0; c < l_; ++c) bits_[r][c] = m.at(r, c) ? 1 : 0;
    first_equal_.resize(k_);
    for (std::size_t r = 0; r < k_; ++r) {
      first_equal_[r] = r;
      for (std::size_t q = 0; q < r; ++q)
        if (bits_[q] == bits_[r]) {
          first_equal_[r] = q;
          break;
        }
    }
    current_.resize(k_);
  }

  std::vector<std::string> run() {
    std::vector<std::vector<std::size_t>> groups;
    if (l_ > 0) {
      groups.emplace_back(l_);
      std::iota(groups.front().begin(), groups.front().end(), 0);
    }
    std::vector<bool> used(k_, false);
    descend(0, used, groups);
    return best_;
  }

 private:
  std::size_t k_;
  std::size_t l_;
  std::vector<std::vector<char>> bits_;
  std::vector<std::size_t> first_equal_;
  std::vector<std::string> current_;
  std::vector<std::string> best_;
  bool have_best_ = false;

  std::string row_string(std::size_t r, const std::vector<std::vector<std::size_t>>& groups) const {
    std::string s;
    s.reserve(l_);
    for (const auto& g : groups) {
      std::size_t ones = 0;
      for (auto c : g) ones += static_cast<std::size_t>(bits_[r][c]);
      s.append(g.size() - ones, '0');
      s.append(ones, '1');
    }
    return s;
  }

  bool prefix_matches_best(std::size_t depth) const {
    if (!have_best_) return false;
    for (std::size_t d = 0; d < depth; ++d)
      if (current_[d] != best_[d]) return false;
    return true;
  }

  void descend(std::size_t depth, std::vector<bool>& used, const std::vector<std::vector<std::size_t>>& groups) {
    if (depth == k_) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    std::string min_row;
    std::vector<std::size_t> ties;
    for (std::size_t r = 0; r < k_; ++r) {
      if (used[r]) continue;
      // Among identical rows only the first unused one is tried.
      bool shadowed = false;
      for (std::size_t q = first_equal_[r]; q < r; ++q)
        if (!used[q] && bits_[q] == bits_[r]) {
          shadowed = true;
          break;
        }
      if (shadowed) continue;
      std::string s = row_string(r, groups);
      if (ties.empty() || s < min_row) {
        min_row = std::move(s);
        ties.assign(1, r);
      } else if (s == min_row) {
        ties.push_back(r);
      }
    }
    for (auto r : ties) {
      if (prefix_matches_best(depth) && min_row > best_[depth]) return;
      current_[depth] = min_row;
      std::vector<std::vector<std::size_t>> next;
      next.reserve(groups.size() * 2);
      for (const auto& g : groups) {
        std::vector<std::size_t> zeros;
        std::vector<std::size_t> ones;
        for (auto c : g) (bits_[r][c] ? ones : zeros).push_back(c);
        if (!zeros.empty()) next.push_back(std::move(zeros));
        if (!ones.empty()) next.push_back(std::move(ones));
      }
      used[r] = true;
      descend(depth + 1, used, next);
      used[r] = false;
    }
  }
};

}  // namespace

Configuration canonicalize(const Matrix& m) {
  if (m.rows() > kMaxCanonicalRows)
    fail(ErrorCode::limit_exceeded,
         "canonical form refused for " + std::to_string(m.rows()) + " rows (limit " +
             std::to_string(kMaxCanonicalRows) + ")");
  Canonicalizer canon(m);
  auto rows = canon.run();
  Configuration out;
  out.rows_ = m.rows();
  out.cols_ = m.cols();
  out.representative_ = rows.empty() ? Matrix(0) : Matrix::from_rows(rows);
  if (m.rows() > 0 && m.cols() == 0) out.representative_ = Matrix(m.rows());
  if (m.rows() == 0) {
    out.representative_ = Matrix(0, std::vector<BitColumn>(m.cols(), BitColumn(0)));
  }
  for (const auto& c : out.representative_.columns()) ++out.multiset_[c];
  out.key_ = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out.key_ += '/';
    out.key_ += rows[i];
  }
  return out;
}

}  // namespace forbconf
