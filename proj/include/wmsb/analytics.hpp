#pragma once

#include <wmsb/crossdiff.hpp>
#include <wmsb/integer.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace wmsb {

// a(n) = 3^n - (-1)^n (OEIS A105723). Counts, among the 3^n unit-row gaps,
// those whose value differs from the row middle's 3^n by at least one factor
// of 3; more precisely value 3^k occurs b(n-k) + a(n-k) times.
Integer a_seq(unsigned n);

// b(n) = 0^n: 1 at n = 0, else 0. The middle gap is the only one attaining
// the row maximum 3^n.
Integer b_seq(unsigned n);

struct CountsRow {
  unsigned level = 0;  // value is 3^level
  Integer value{1};
  Integer total{0};
  Integer peaks{0};      // strict local maxima of the row
  Integer non_peaks{0};

  friend bool operator==(const CountsRow&, const CountsRow&) = default;
};

struct CountsTable {
  unsigned n = 0;
  std::vector<CountsRow> rows;  // level 0 .. n

  friend bool operator==(const CountsTable&, const CountsTable&) = default;
};

// Closed-form table for unit row n: level k > 0 has total b(n-k) + a(n-k),
// peaks b(n-k) + a(n-k)/2, non-peaks a(n-k)/2; level 0 has total
// b(n) + a(n)/2, all of it peaks b(n) and non-peaks a(n)/2 -- with a value
// of 1 a gap is a peak only in the one-term row C_0.
CountsTable predicted_counts(unsigned n);

// Table tallied directly from a materialized unit row. Throws
// std::domain_error when a value is not a power of 3 within 3^0..3^n.
CountsTable observed_counts(const CrossDiffRow& row);

// Fraction of gaps in unit row n with value 1: ((3^n - (-1)^n)/2) / 3^n,
// which tends to 1/2. Requires n >= 1 (row 0's single value is 3^0 = 1 but
// the closed form starts at n = 1).
Fraction ones_fraction(unsigned n);

// Residue classes mod 9 of an adjacent reduced unit-row pair (p/q, r/s):
// the pair of pairs ((p mod 9, q mod 9), (r mod 9, s mod 9)).
using ResiduePair = std::array<int, 2>;
using PairClass = std::array<ResiduePair, 2>;

struct Mod9Census {
  unsigned max_n = 0;
  Integer pairs{0};

  // Split by cross-difference residue mod 9. Unit cross-differences are
  // powers of 3, whose residues mod 9 are only 1, 3 and 0; residue 6 gets
  // its own counter anyway so its absence is measured, not assumed.
  Integer cd1{0};
  Integer cd3{0};
  Integer cd6{0};
  Integer cd0_same{0};  // cd = 0 mod 9 with (p,q) = (r,s) mod 9
  Integer cd0_comp{0};  // cd = 0 mod 9 with (p,q) = (9-r, 9-s) mod 9
  Integer other{0};     // cd = 0 mod 9 with neither relation: expected never

  // Pairs where the next row reduced with factor 3 under a cd = 1 or 3 mod 9
  // class, or failed to reduce by 3 under cd0_same, or reduced under
  // cd0_comp: expected zero (reduction happens exactly in the same-residue
  // class).
  Integer redcd9_violations{0};

  // Distinct successor residue classes seen per left residue class.
  std::map<ResiduePair, std::set<ResiduePair>> followers;

  std::size_t max_follower_count() const;
};

// Walks adjacent pairs of unit rows 0..max_n and tallies the census.
Mod9Census mod9_census(unsigned max_n);

struct OeisCheck {
  std::string id;
  std::vector<Integer> expected;
  std::vector<Integer> computed;
  bool match = false;
};

// Cross-checks a_seq against OEIS A105723 and the unit-row ones count
// b(n) + a(n)/2 against OEIS A152011, over their published prefixes.
std::vector<OeisCheck> oeis_crosschecks();

}  // namespace wmsb
