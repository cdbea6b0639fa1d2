#include <wmsb/analytics.hpp>

#include <wmsb/fraction.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace wmsb {

Integer a_seq(unsigned n) {
  return pow3(n) - (n % 2 == 0 ? 1 : -1);
}

Integer b_seq(unsigned n) { return n == 0 ? 1 : 0; }

CountsTable predicted_counts(unsigned n) {
  CountsTable table{n, {}};
  table.rows.reserve(n + 1);
  for (unsigned level = 0; level <= n; ++level) {
    CountsRow row{level, pow3(level), 0, 0, 0};
    if (level == 0) {
      // A value-1 gap has no smaller neighbor to dominate, so it is a peak
      // only in the one-gap row C_0.
      row.peaks = b_seq(n);
      row.non_peaks = a_seq(n) / 2;
      row.total = row.peaks + row.non_peaks;
    } else {
      unsigned m = n - level;
      row.peaks = b_seq(m) + a_seq(m) / 2;
      row.non_peaks = a_seq(m) / 2;
      row.total = row.peaks + row.non_peaks;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CountsTable observed_counts(const CrossDiffRow& row) {
  CountsTable table{row.n, {}};
  table.rows.reserve(row.n + 1);
  for (unsigned level = 0; level <= row.n; ++level) {
    table.rows.push_back(CountsRow{level, pow3(level), 0, 0, 0});
  }
  for (std::size_t i = 0; i < row.values.size(); ++i) {
    std::optional<unsigned> e = log3_exact(row.values[i]);
    if (!e || *e > row.n) {
      throw std::domain_error("value " + row.values[i].str() + " at gap " +
                              std::to_string(i) + " is outside 3^0..3^" +
                              std::to_string(row.n));
    }
    CountsRow& r = table.rows[*e];
    r.total += 1;
    if (is_strict_local_max(row, i)) {
      r.peaks += 1;
    } else {
      r.non_peaks += 1;
    }
  }
  return table;
}

Fraction ones_fraction(unsigned n) {
  if (n == 0) {
    throw std::invalid_argument("ones fraction needs a row index of at least 1");
  }
  return Fraction(a_seq(n) / 2, pow3(n));
}

std::size_t Mod9Census::max_follower_count() const {
  std::size_t best = 0;
  for (const auto& [cls, next] : followers) {
    best = std::max(best, next.size());
  }
  return best;
}

Mod9Census mod9_census(unsigned max_n) {
  Mod9Census census;
  census.max_n = max_n;
  for (unsigned n = 0; n <= max_n; ++n) {
    for_each_adjacent_pair(unit_row_spec(n), [&census](const Fraction& left,
                                                       const Fraction& right) {
      ResiduePair l{mod9(left.num), mod9(left.den)};
      ResiduePair r{mod9(right.num), mod9(right.den)};
      census.pairs += 1;
      census.followers[l].insert(r);
      int cd = mod9(cross_difference(left, right));
      // The reduction factor the pair will produce one row down; both
      // mediants carry the same factor (checked by the reduction suite).
      const Integer& factor = weighted_mediants(3, left, right, true)[0].factor;
      switch (cd) {
        case 1:
          census.cd1 += 1;
          break;
        case 3:
          census.cd3 += 1;
          break;
        case 6:
          census.cd6 += 1;
          break;
        case 0: {
          bool same = l == r;
          bool comp = l[0] == (9 - r[0]) % 9 && l[1] == (9 - r[1]) % 9;
          if (same) {
            census.cd0_same += 1;
            if (factor != 3) census.redcd9_violations += 1;
          } else if (comp) {
            census.cd0_comp += 1;
            if (factor != 1) census.redcd9_violations += 1;
          } else {
            census.other += 1;
          }
          break;
        }
        default:
          census.other += 1;
          break;
      }
    });
  }
  return census;
}

std::vector<OeisCheck> oeis_crosschecks() {
  std::vector<OeisCheck> checks;
  {
    // OEIS A105723: a(n) = 3^n - (-1)^n.
    OeisCheck check{"A105723", {0, 4, 8, 28, 80, 244, 728, 2188}, {}, false};
    for (unsigned n = 0; n < check.expected.size(); ++n) {
      check.computed.push_back(a_seq(n));
    }
    check.match = check.computed == check.expected;
    checks.push_back(std::move(check));
  }
  {
    // OEIS A152011: number of 1s among the unit row's cross-differences,
    // b(n) + a(n)/2.
    OeisCheck check{"A152011", {1, 2, 4, 14, 40, 122, 364}, {}, false};
    for (unsigned n = 0; n < check.expected.size(); ++n) {
      check.computed.push_back(b_seq(n) + a_seq(n) / 2);
    }
    check.match = check.computed == check.expected;
    checks.push_back(std::move(check));
  }
  return checks;
}

}  // namespace wmsb
