#include <wmsb/fraction.hpp>

#include <stdexcept>
#include <utility>

namespace wmsb {

Fraction::Fraction(Integer numerator, Integer denominator)
    : num(std::move(numerator)), den(std::move(denominator)) {
  if (num < 0 || den < 0) {
    throw std::invalid_argument("fraction parts must be nonnegative: " +
                                num.str() + "/" + den.str());
  }
  if (den == 0 && num == 0) {
    throw std::invalid_argument("fraction 0/0 is not a value");
  }
}

std::strong_ordering compare_values(const Fraction& a, const Fraction& b) {
  // Works for den == 0 too: n/0 compares greater than any finite value and
  // equal to any other m/0.
  Integer lhs = a.num * b.den;
  Integer rhs = b.num * a.den;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

bool value_less(const Fraction& a, const Fraction& b) {
  return compare_values(a, b) == std::strong_ordering::less;
}

bool value_equal(const Fraction& a, const Fraction& b) {
  return compare_values(a, b) == std::strong_ordering::equal;
}

Integer cross_difference(const Fraction& left, const Fraction& right) {
  return left.den * right.num - left.num * right.den;
}

ReductionResult reduce_fraction(const Fraction& f) {
  Integer g = boost::multiprecision::gcd(f.num, f.den);
  // gcd(0, d) == d, so 0/d collapses to the canonical 0/1; gcd(n, 0) == n
  // keeps the infinite bound at 1/0.
  return {Fraction(f.num / g, f.den / g), std::move(g)};
}

std::vector<Mediant> weighted_mediants(unsigned k, const Fraction& left,
                                       const Fraction& right, bool reduce) {
  if (k < 2) {
    throw std::invalid_argument("mediant weight must be at least 2, got " +
                                std::to_string(k));
  }
  std::vector<Mediant> result;
  result.reserve(k - 1);
  for (unsigned j = 1; j < k; ++j) {
    Fraction raw(Integer(k - j) * left.num + Integer(j) * right.num,
                 Integer(k - j) * left.den + Integer(j) * right.den);
    if (reduce) {
      ReductionResult r = reduce_fraction(raw);
      result.push_back({std::move(r.reduced), std::move(r.factor)});
    } else {
      result.push_back({std::move(raw), Integer(1)});
    }
  }
  return result;
}

std::string to_string(const Fraction& f) {
  return f.num.str() + "/" + f.den.str();
}

Fraction parse_fraction(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("fraction '" + std::string(text) +
                                "' lacks a '/'");
  }
  return Fraction(parse_decimal(text.substr(0, slash)),
                  parse_decimal(text.substr(slash + 1)));
}

}  // namespace wmsb
