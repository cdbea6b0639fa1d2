#pragma once

#include <wmsb/integer.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace wmsb {

// Exact nonnegative rational. A Fraction carries no implicit "reduced"
// promise: 6/15 and 2/5 are distinct values of this type, and reduction is
// always an explicit step that reports its factor (that factor is the whole
// point of the reduction analysis). den == 0 is allowed only with num > 0 and
// stands for the point at infinity that classical k = 2 trees use as their
// right-hand bound; the k = 3 unit case never produces such a value.
struct Fraction {
  Integer num{0};
  Integer den{1};

  Fraction() = default;
  Fraction(Integer numerator, Integer denominator);

  // Representation equality: 6/15 != 2/5. See value_equal for rational equality.
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

// Orders by rational value via cross-multiplication, so it is well defined
// for unreduced representations and for the n/0 bound (greater than any
// finite value).
std::strong_ordering compare_values(const Fraction& a, const Fraction& b);
bool value_less(const Fraction& a, const Fraction& b);
bool value_equal(const Fraction& a, const Fraction& b);

// qr - ps for left = p/q, right = r/s: positive iff right is the larger
// value. Representation-dependent by design.
Integer cross_difference(const Fraction& left, const Fraction& right);

struct ReductionResult {
  Fraction reduced;
  Integer factor;  // gcd removed; 1 means already in lowest terms
};

ReductionResult reduce_fraction(const Fraction& f);

struct Mediant {
  Fraction fraction;
  Integer factor;  // reduction factor, 1 when reduction was off or a no-op
};

// The k-1 weighted mediants of (left, right) in order: the j-th (1-based) is
// ((k-j)*a + j*c) / ((k-j)*b + j*d). Requires k >= 2.
std::vector<Mediant> weighted_mediants(unsigned k, const Fraction& left,
                                       const Fraction& right, bool reduce);

std::string to_string(const Fraction& f);

// Strict "num/den" parse: decimal digits on both sides, no sign, no spaces.
Fraction parse_fraction(std::string_view text);

}  // namespace wmsb
