#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace forbconf {

/// One (0,1)-column of an m-rowed matrix. Bit i holds row i, so the numeric
/// value of a column treats row 0 as the least significant bit.
///
/// Columns of at most 64 rows live in a single word; taller columns spill the
/// remaining words into a heap vector. Bits at positions >= width are zero.
class BitColumn {
 public:
  static constexpr std::size_t kWordBits = 64;

  BitColumn() = default;
  explicit BitColumn(std::size_t width);

  static BitColumn from_word(std::size_t width, std::uint64_t word);
  /// Parses '0'/'1' characters read top to bottom.
  static BitColumn from_string(std::string_view bits);
  static BitColumn ones(std::size_t width);

  std::size_t width() const noexcept { return width_; }
  std::size_t word_count() const noexcept { return (width_ + kWordBits - 1) / kWordBits; }
  std::uint64_t word(std::size_t i) const noexcept { return i == 0 ? low_ : high_[i - 1]; }
  /// The low word; the whole column when width() <= 64.
  std::uint64_t low_word() const noexcept { return low_; }

  bool test(std::size_t row) const noexcept {
    return (word(row / kWordBits) >> (row % kWordBits)) & 1u;
  }
  void set(std::size_t row, bool value = true);

  std::size_t popcount() const noexcept;
  std::size_t zeros() const noexcept { return width_ - popcount(); }
  BitColumn complemented() const;
  /// Rows listed in `rows`, in that order, become rows 0.. of the result.
  BitColumn gather(const std::vector<std::size_t>& rows) const;
  /// Vertical concatenation: this column on top of `below`.
  BitColumn stacked(const BitColumn& below) const;

  std::string to_string() const;

  /// Order used for candidate enumeration: (column sum, numeric value).
  static bool sum_then_value_less(const BitColumn& a, const BitColumn& b);
  /// Numeric comparison (most significant word first); widths must match.
  static std::strong_ordering numeric_compare(const BitColumn& a, const BitColumn& b);

  friend bool operator==(const BitColumn& a, const BitColumn& b) {
    return a.width_ == b.width_ && a.low_ == b.low_ && a.high_ == b.high_;
  }
  /// Total order: width first, then numeric value.
  friend std::strong_ordering operator<=>(const BitColumn& a, const BitColumn& b) {
    if (auto c = a.width_ <=> b.width_; c != 0) return c;
    return numeric_compare(a, b);
  }

  std::size_t hash() const noexcept;

 private:
  std::uint32_t width_ = 0;
  std::uint64_t low_ = 0;
  std::vector<std::uint64_t> high_;

  std::uint64_t& word_ref(std::size_t i) { return i == 0 ? low_ : high_[i - 1]; }
};

struct BitColumnHash {
  std::size_t operator()(const BitColumn& c) const noexcept { return c.hash(); }
};

}  // namespace forbconf
