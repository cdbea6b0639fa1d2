#pragma once

#include <string>
#include <vector>

namespace wmsb {

struct SuiteResult {
  std::string name;
  bool pass = false;
  long long checks = 0;   // individual assertions evaluated
  std::string detail;     // summary when passing, first counterexample when not
};

// Each suite re-derives its subject from ground truth (materialized fraction
// rows) and checks the matching law exhaustively up to the given row.

// Mediant reduction factors are 1 or 3, equal on both mediants of a pair,
// divide the pair's cross-difference, and reducing pairs interleave the gap
// in an arithmetic progression of numerators and denominators.
SuiteResult verify_reduction(unsigned max_n);

// Value counts per level match the closed forms, including the peak split,
// the a-sequence recurrence and the published OEIS prefixes.
SuiteResult verify_counts(unsigned max_n);

// Mod-9 census has no pairs outside the expected classes, reduction happens
// exactly in the same-residue class, and each residue class has at most 17
// distinct follower classes.
SuiteResult verify_mod9(unsigned max_n);

// Every unit cross-difference row is a palindrome.
SuiteResult verify_palindrome(unsigned max_n);

// The three row constructions agree gap by gap: fractions, propagation rule,
// ternary closed form.
SuiteResult verify_oracle_equivalence(unsigned max_n);

// Every reduced p/q in (0, 1) with odd q up to max_den appears by row
// max_row, and the descent search agrees with a brute-force scan.
SuiteResult verify_completeness(unsigned max_row, unsigned max_den);

// Steeples have length 3^floor(n/2), sit symmetrically around the middle
// gap, are flanked by 1s, and follow the alternating tripling recurrence.
SuiteResult verify_steeples(unsigned max_n);

// All suites at their default depths, in the order above.
std::vector<SuiteResult> verify_all();

std::string format_result(const SuiteResult& result);

}  // namespace wmsb
