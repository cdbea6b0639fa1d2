#pragma once

#include <wmsb/integer.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace wmsb {

// Base-3 digit view of a gap index, zero-padded on the left to a fixed
// width. Width n matches row n: the 3^n gaps of the unit row correspond to
// exactly the width-n ternary strings.
class TernaryIndex {
 public:
  // Requires value >= 0 and value < 3^width.
  TernaryIndex(Integer value, std::size_t width);

  // Minimal-width view (width 1 for value 0).
  static TernaryIndex from_value(const Integer& value);

  const Integer& value() const { return value_; }
  std::size_t width() const { return digits_.size(); }
  // Most significant digit first.
  const std::vector<std::uint8_t>& digits() const { return digits_; }

  std::size_t ones_count() const;

  // 1-based position of the first digit (from the most significant end) that
  // is not 1; nullopt when every digit is 1, i.e. at the exact middle gap
  // (3^n - 1)/2 of its row.
  std::optional<std::size_t> middleness() const;

 private:
  Integer value_;
  std::vector<std::uint8_t> digits_;
};

// Cross-difference of gap i in the no-reduction unit row: 3^(number of 1
// digits of i in base 3). Width-independent because padding zeros add no 1s.
Integer no_reduction_value(const Integer& index);

// Cross-difference of gap `index` in the reduced unit row of the given
// width. Digit recursion: all-ones -> 3^width; a steeple index (at least
// ceil(width/2) leading ones) -> 3^(2*ones + 1 - width); otherwise strip the
// leading ones, the first non-1 digit, and as many digits again, then recurse
// on the tail.
Integer unit_value(const TernaryIndex& index);
Integer unit_value(const Integer& index, std::size_t width);

// Value at minimal width; stable under further widening by leading zeros,
// hence the value "at infinity" for the fixed gap index.
Integer infinite_unit_value(const Integer& index);

}  // namespace wmsb
