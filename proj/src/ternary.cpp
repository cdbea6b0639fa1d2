#include <wmsb/ternary.hpp>

#include <stdexcept>
#include <utility>

namespace wmsb {

TernaryIndex::TernaryIndex(Integer value, std::size_t width)
    : value_(std::move(value)), digits_(width, 0) {
  if (value_ < 0) {
    throw std::invalid_argument("ternary index must be nonnegative");
  }
  Integer rest = value_;
  std::size_t pos = width;
  while (rest != 0) {
    if (pos == 0) {
      throw std::invalid_argument("index " + value_.str() +
                                  " does not fit in width " +
                                  std::to_string(width));
    }
    digits_[--pos] = static_cast<std::uint8_t>(rest % 3);
    rest /= 3;
  }
}

TernaryIndex TernaryIndex::from_value(const Integer& value) {
  if (value < 0) {
    throw std::invalid_argument("ternary index must be nonnegative");
  }
  std::size_t width = 1;
  for (Integer rest = value / 3; rest != 0; rest /= 3) ++width;
  return TernaryIndex(value, width);
}

std::size_t TernaryIndex::ones_count() const {
  std::size_t count = 0;
  for (std::uint8_t d : digits_) count += (d == 1);
  return count;
}

std::optional<std::size_t> TernaryIndex::middleness() const {
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] != 1) return i + 1;
  }
  return std::nullopt;
}

Integer no_reduction_value(const Integer& index) {
  return pow3(static_cast<unsigned>(TernaryIndex::from_value(index).ones_count()));
}

Integer unit_value(const TernaryIndex& index) {
  const std::vector<std::uint8_t>& d = index.digits();
  std::size_t lo = 0;
  std::size_t width = d.size();
  while (true) {
    if (width == 0) return 1;
    std::size_t ones = 0;
    while (ones < width && d[lo + ones] == 1) ++ones;
    if (ones == width) return pow3(static_cast<unsigned>(width));
    if (2 * ones >= width) {
      // Steeple range: middleness m = ones + 1 exceeds ceil(width/2), value
      // 3^(2m - width - 1).
      return pow3(static_cast<unsigned>(2 * ones + 1 - width));
    }
    // Strip 2m - 1 digits -- the m - 1 leading ones, the first non-1 digit,
    // and the m - 1 digits after it -- and recurse on the tail.
    lo += 2 * ones + 1;
    width -= 2 * ones + 1;
  }
}

Integer unit_value(const Integer& index, std::size_t width) {
  return unit_value(TernaryIndex(index, width));
}

Integer infinite_unit_value(const Integer& index) {
  // Prepending zeros never changes the recursion's outcome (a zero is
  // stripped immediately), so the minimal width already gives the limit.
  return unit_value(TernaryIndex::from_value(index));
}

}  // namespace wmsb
