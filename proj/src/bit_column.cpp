#include "forbconf/bit_column.hpp"

#include "forbconf/error.hpp"

namespace forbconf {

namespace {

std::uint64_t tail_mask(std::size_t width, std::size_t word_index) {
  const std::size_t start = word_index * BitColumn::kWordBits;
  const std::size_t used = width - start;
  return used >= BitColumn::kWordBits ? ~std::uint64_t{0} : ((std::uint64_t{1} << used) - 1);
}

}  // namespace

BitColumn::BitColumn(std::size_t width) : width_(static_cast<std::uint32_t>(width)) {
  if (width > 0xFFFFFFFFu) fail(ErrorCode::limit_exceeded, "column width too large");
  if (width > kWordBits) high_.assign(word_count() - 1, 0);
}

BitColumn BitColumn::from_word(std::size_t width, std::uint64_t word) {
  BitColumn c(width);
  if (width == 0) return c;
  c.low_ = word & tail_mask(width, 0);
  return c;
}

BitColumn BitColumn::from_string(std::string_view bits) {
  BitColumn c(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      c.set(i);
    } else if (bits[i] != '0') {
      fail(ErrorCode::parse_error, "column text must contain only '0' and '1'");
    }
  }
  return c;
}

BitColumn BitColumn::ones(std::size_t width) {
  BitColumn c(width);
  for (std::size_t w = 0; w < c.word_count(); ++w) c.word_ref(w) = tail_mask(width, w);
  return c;
}

void BitColumn::set(std::size_t row, bool value) {
  if (row >= width_) fail(ErrorCode::out_of_range, "row index outside column");
  const std::uint64_t bit = std::uint64_t{1} << (row % kWordBits);
  std::uint64_t& w = word_ref(row / kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

std::size_t BitColumn::popcount() const noexcept {
  std::size_t n = static_cast<std::size_t>(std::popcount(low_));
  for (auto w : high_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BitColumn BitColumn::complemented() const {
  BitColumn c(width_);
  for (std::size_t w = 0; w < word_count(); ++w) c.word_ref(w) = ~word(w) & tail_mask(width_, w);
  return c;
}

BitColumn BitColumn::gather(const std::vector<std::size_t>& rows) const {
  BitColumn c(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i] >= width_) fail(ErrorCode::out_of_range, "row index outside column");
    if (test(rows[i])) c.set(i);
  }
  return c;
}

BitColumn BitColumn::stacked(const BitColumn& below) const {
  BitColumn c(width_ + below.width_);
  if (c.width_ <= kWordBits) {
    c.low_ = low_ | (below.width_ == 0 ? 0 : below.low_ << width_);
    return c;
  }
  for (std::size_t r = 0; r < width_; ++r)
    if (test(r)) c.set(r);
  for (std::size_t r = 0; r < below.width_; ++r)
    if (below.test(r)) c.set(width_ + r);
  return c;
}

std::string BitColumn::to_string() const {
  std::string s(width_, '0');
  for (std::size_t r = 0; r < width_; ++r)
    if (test(r)) s[r] = '1';
  return s;
}

std::strong_ordering BitColumn::numeric_compare(const BitColumn& a, const BitColumn& b) {
  const std::size_t n = std::max(a.word_count(), b.word_count());
  for (std::size_t i = n; i-- > 0;) {
    const std::uint64_t x = i < a.word_count() ? a.word(i) : 0;
    const std::uint64_t y = i < b.word_count() ? b.word(i) : 0;
    if (x != y) return x < y ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool BitColumn::sum_then_value_less(const BitColumn& a, const BitColumn& b) {
  const auto sa = a.popcount();
  const auto sb = b.popcount();
  if (sa != sb) return sa < sb;
  return numeric_compare(a, b) < 0;
}

std::size_t BitColumn::hash() const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(low_) ^ (static_cast<std::size_t>(width_) * 0x9E3779B97F4A7C15ull);
  for (auto w : high_) h = (h * 1099511628211ull) ^ std::hash<std::uint64_t>{}(w);
  return h;
}

}  // namespace forbconf
