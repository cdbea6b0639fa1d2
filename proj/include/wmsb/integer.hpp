#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wmsb {

// Arbitrary-precision signed integer. Numerators and cross-differences grow
// geometrically with the row index, so all arithmetic goes through this type.
using Integer = boost::multiprecision::cpp_int;

inline Integer ipow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(Integer(base), exponent);
}

inline Integer pow3(unsigned exponent) { return ipow(3, exponent); }

// Exponent e with value == 3^e, or nullopt when value is not a power of 3.
inline std::optional<unsigned> log3_exact(const Integer& value) {
  if (value <= 0) return std::nullopt;
  Integer rest = value;
  unsigned e = 0;
  while (rest % 3 == 0) {
    rest /= 3;
    ++e;
  }
  if (rest != 1) return std::nullopt;
  return e;
}

// x mod 9 normalized to 0..8 (cpp_int's % keeps the dividend's sign).
inline int mod9(const Integer& x) {
  return static_cast<int>(((x % 9) + 9) % 9);
}

// Strict decimal parse: nonempty, digits only, no sign, no whitespace.
inline Integer parse_decimal(std::string_view text, std::size_t max_digits = 400) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  if (text.size() > max_digits) {
    throw std::invalid_argument("integer literal longer than " +
                                std::to_string(max_digits) + " digits");
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("invalid integer literal '" +
                                  std::string(text) + "'");
    }
  }
  return Integer(std::string(text));
}

}  // namespace wmsb
