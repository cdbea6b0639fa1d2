#include <wmsb/verify.hpp>

#include <wmsb/analytics.hpp>
#include <wmsb/crossdiff.hpp>
#include <wmsb/fraction.hpp>
#include <wmsb/integer.hpp>
#include <wmsb/row.hpp>
#include <wmsb/ternary.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <set>
#include <sstream>
#include <utility>

namespace wmsb {

namespace {

// Records only the first counterexample; later checks still run but cannot
// overwrite it, so the report stays small and stable.
struct Failure {
  bool failed = false;
  std::string message;

  void note(std::string msg) {
    if (!failed) {
      failed = true;
      message = std::move(msg);
    }
  }
};

SuiteResult finish(std::string name, const Failure& failure, long long checks,
                   std::string pass_detail) {
  SuiteResult result{std::move(name), !failure.failed, checks, {}};
  result.detail = failure.failed ? failure.message : std::move(pass_detail);
  return result;
}

std::string describe_pair(unsigned n, const Fraction& left,
                          const Fraction& right) {
  return "row " + std::to_string(n) + " pair (" + to_string(left) + ", " +
         to_string(right) + ")";
}

}  // namespace

SuiteResult verify_reduction(unsigned max_n) {
  Failure failure;
  long long checks = 0;
  long long reducing = 0;
  std::set<Integer> num_steps;
  std::set<Integer> den_steps;
  // Pairs of row n produce the mediants of row n + 1, so walk rows
  // 0 .. max_n - 1.
  for (unsigned n = 0; n + 1 <= max_n; ++n) {
    for_each_adjacent_pair(unit_row_spec(n), [&](const Fraction& left,
                                                 const Fraction& right) {
      ++checks;
      if (failure.failed) return;
      std::vector<Mediant> ms = weighted_mediants(3, left, right, true);
      const Integer& f0 = ms[0].factor;
      const Integer& f1 = ms[1].factor;
      if (f0 != f1) {
        failure.note(describe_pair(n, left, right) +
                     ": asymmetric reduction factors " + f0.str() + " vs " +
                     f1.str());
        return;
      }
      if (f0 != 1 && f0 != 3) {
        failure.note(describe_pair(n, left, right) + ": reduction factor " +
                     f0.str() + " outside {1, 3}");
        return;
      }
      Integer cd = cross_difference(left, right);
      if (cd % f0 != 0) {
        failure.note(describe_pair(n, left, right) + ": factor " + f0.str() +
                     " does not divide cross-difference " + cd.str());
        return;
      }
      if (!(value_less(left, ms[0].fraction) &&
            value_less(ms[0].fraction, ms[1].fraction) &&
            value_less(ms[1].fraction, right))) {
        failure.note(describe_pair(n, left, right) +
                     ": mediants break monotonicity");
        return;
      }
      if (f0 == 3) {
        ++reducing;
        // With both mediants reduced by 3, the four numerators (and the four
        // denominators) form arithmetic progressions with a nonzero step.
        Integer dn1 = ms[0].fraction.num - left.num;
        Integer dn2 = ms[1].fraction.num - ms[0].fraction.num;
        Integer dn3 = right.num - ms[1].fraction.num;
        Integer dd1 = ms[0].fraction.den - left.den;
        Integer dd2 = ms[1].fraction.den - ms[0].fraction.den;
        Integer dd3 = right.den - ms[1].fraction.den;
        if (dn1 != dn2 || dn2 != dn3 || dn1 == 0) {
          failure.note(describe_pair(n, left, right) +
                       ": reducing pair numerators not in arithmetic "
                       "progression (" +
                       dn1.str() + ", " + dn2.str() + ", " + dn3.str() + ")");
          return;
        }
        if (dd1 != dd2 || dd2 != dd3) {
          failure.note(describe_pair(n, left, right) +
                       ": reducing pair denominators not in arithmetic "
                       "progression");
          return;
        }
        num_steps.insert(dn1);
        den_steps.insert(dd1);
      }
    });
  }
  std::ostringstream detail;
  detail << "pairs=" << checks << " reducing=" << reducing << " num-steps={";
  std::size_t shown = 0;
  for (const Integer& s : num_steps) {
    if (shown++) detail << ",";
    if (shown > 8) {
      detail << "...";
      break;
    }
    detail << s;
  }
  detail << "} den-step-count=" << den_steps.size();
  return finish("reduction-law", failure, checks, detail.str());
}

SuiteResult verify_counts(unsigned max_n) {
  Failure failure;
  long long checks = 0;
  for (unsigned n = 0; n <= max_n; ++n) {
    ++checks;
    CountsTable observed =
        observed_counts(crossdiffs_from_fractions(unit_row_spec(n)));
    CountsTable predicted = predicted_counts(n);
    if (!(observed == predicted)) {
      for (unsigned level = 0; level <= n; ++level) {
        if (!(observed.rows[level] == predicted.rows[level])) {
          failure.note("row " + std::to_string(n) + " level " +
                       std::to_string(level) + ": observed total/peaks/non " +
                       observed.rows[level].total.str() + "/" +
                       observed.rows[level].peaks.str() + "/" +
                       observed.rows[level].non_peaks.str() +
                       " vs predicted " + predicted.rows[level].total.str() +
                       "/" + predicted.rows[level].peaks.str() + "/" +
                       predicted.rows[level].non_peaks.str());
          break;
        }
      }
    }
  }
  // a(n + 1) = 2a(n) + 3a(n - 1).
  for (unsigned n = 1; n <= max_n; ++n) {
    ++checks;
    if (a_seq(n + 1) != 2 * a_seq(n) + 3 * a_seq(n - 1)) {
      failure.note("a-sequence recurrence fails at n=" + std::to_string(n));
    }
  }
  for (const OeisCheck& check : oeis_crosschecks()) {
    ++checks;
    if (!check.match) failure.note("OEIS mismatch for " + check.id);
  }
  return finish("counts", failure, checks,
                "rows 0.." + std::to_string(max_n) +
                    " match the closed forms, recurrence and OEIS prefixes");
}

SuiteResult verify_mod9(unsigned max_n) {
  Failure failure;
  Mod9Census census = mod9_census(max_n);
  long long checks = static_cast<long long>(census.pairs);
  if (census.other != 0) {
    failure.note("census found " + census.other.str() +
                 " pair(s) outside the expected residue classes");
  }
  if (census.redcd9_violations != 0) {
    failure.note("census found " + census.redcd9_violations.str() +
                 " reduction/residue mismatches");
  }
  if (census.cd6 != 0) {
    failure.note("census found " + census.cd6.str() +
                 " pair(s) with cross-difference 6 mod 9");
  }
  Integer classified = census.cd1 + census.cd3 + census.cd6 +
                       census.cd0_same + census.cd0_comp + census.other;
  if (classified != census.pairs) {
    failure.note("census classified " + classified.str() + " of " +
                 census.pairs.str() + " pairs");
  }
  std::size_t followers = census.max_follower_count();
  if (followers > 17) {
    failure.note("a residue class has " + std::to_string(followers) +
                 " distinct follower classes, expected at most 17");
  }
  std::ostringstream detail;
  detail << "pairs=" << census.pairs << " cd1=" << census.cd1
         << " cd3=" << census.cd3 << " cd0-same=" << census.cd0_same
         << " cd0-comp=" << census.cd0_comp
         << " max-followers=" << followers;
  return finish("mod9", failure, checks, detail.str());
}

SuiteResult verify_palindrome(unsigned max_n) {
  Failure failure;
  long long checks = 0;
  for (unsigned n = 0; n <= max_n; ++n) {
    CrossDiffRow row = crossdiffs_from_fractions(unit_row_spec(n));
    for (std::size_t i = 0; 2 * i < row.values.size(); ++i) {
      ++checks;
      if (row.values[i] != row.values[row.values.size() - 1 - i]) {
        failure.note("row " + std::to_string(n) + " differs at mirrored gaps " +
                     std::to_string(i) + " / " +
                     std::to_string(row.values.size() - 1 - i));
        break;
      }
    }
  }
  return finish("palindrome", failure, checks,
                "rows 0.." + std::to_string(max_n) + " are palindromes");
}

SuiteResult verify_oracle_equivalence(unsigned max_n) {
  Failure failure;
  long long checks = 0;
  CrossDiffRow by_rule{0, {Integer(1)}};
  for (unsigned n = 0; n <= max_n; ++n) {
    if (n > 0) by_rule = propagate_unit(by_rule);
    CrossDiffRow by_fractions = crossdiffs_from_fractions(unit_row_spec(n));
    for (std::size_t i = 0; i < by_fractions.values.size(); ++i) {
      ++checks;
      if (failure.failed) break;
      if (by_fractions.values[i] != by_rule.values[i]) {
        failure.note("row " + std::to_string(n) + " gap " + std::to_string(i) +
                     ": fractions give " + by_fractions.values[i].str() +
                     ", propagation gives " + by_rule.values[i].str());
        break;
      }
      Integer by_index = unit_value(Integer(i), n);
      if (by_fractions.values[i] != by_index) {
        failure.note("row " + std::to_string(n) + " gap " + std::to_string(i) +
                     ": fractions give " + by_fractions.values[i].str() +
                     ", ternary oracle gives " + by_index.str());
        break;
      }
    }
  }
  return finish("oracle-equivalence", failure, checks,
                "fractions, propagation and ternary oracle agree on rows 0.." +
                    std::to_string(max_n));
}

SuiteResult verify_completeness(unsigned max_row, unsigned max_den) {
  Failure failure;
  long long checks = 0;
  for (unsigned q = 1; q <= max_den; q += 2) {
    for (unsigned p = 1; p < q; ++p) {
      if (boost::multiprecision::gcd(Integer(p), Integer(q)) != 1) continue;
      ++checks;
      Fraction target{p, q};
      std::optional<RowPosition> by_descent = find_fraction(target, max_row);
      if (!by_descent) {
        failure.note(to_string(target) + " not found by row " +
                     std::to_string(max_row));
        continue;
      }
      // Denominators small enough to scan get an independent confirmation.
      if (q <= 9) {
        std::optional<RowPosition> by_scan =
            find_fraction_by_scan(target, max_row);
        if (!by_scan || !(*by_scan == *by_descent)) {
          failure.note("descent and scan disagree for " + to_string(target));
        }
      }
    }
  }
  return finish("completeness", failure, checks,
                "all reduced odd-denominator fractions up to /" +
                    std::to_string(max_den) + " appear by row " +
                    std::to_string(max_row));
}

SuiteResult verify_steeples(unsigned max_n) {
  Failure failure;
  long long checks = 0;
  Steeple prev;
  for (unsigned n = 0; n <= max_n; ++n) {
    CrossDiffRow row = crossdiffs_from_fractions(unit_row_spec(n));
    Steeple s = extract_steeple(row);
    ++checks;
    if (n == 0) {
      if (!s.values.empty()) failure.note("row 0 should have an empty steeple");
      prev = std::move(s);
      continue;
    }
    std::size_t middle = (row.values.size() - 1) / 2;
    std::size_t expected_len = 1;
    for (unsigned i = 0; i < n / 2; ++i) expected_len *= 3;
    if (s.end - s.start != expected_len) {
      failure.note("row " + std::to_string(n) + " steeple length " +
                   std::to_string(s.end - s.start) + ", expected " +
                   std::to_string(expected_len));
      break;
    }
    if (!(s.start <= middle && middle < s.end) ||
        s.start + s.end != row.values.size()) {
      failure.note("row " + std::to_string(n) +
                   " steeple is not centered on the middle gap");
      break;
    }
    if (row.values[middle] != pow3(n)) {
      failure.note("row " + std::to_string(n) + " middle value is " +
                   row.values[middle].str() + ", expected 3^" +
                   std::to_string(n));
      break;
    }
    if (row.values[s.start - 1] != 1 || row.values[s.end] != 1) {
      failure.note("row " + std::to_string(n) + " steeple is not flanked by 1s");
      break;
    }
    if (n == 1) {
      if (s.values != std::vector<Integer>{3}) {
        failure.note("row 1 steeple should be {3}");
        break;
      }
    } else if (n % 2 == 1) {
      // Odd rows triple the previous steeple elementwise.
      bool ok = s.values.size() == prev.values.size();
      for (std::size_t i = 0; ok && i < s.values.size(); ++i) {
        ok = s.values[i] == 3 * prev.values[i];
      }
      if (!ok) {
        failure.note("row " + std::to_string(n) +
                     " steeple is not 3x the previous steeple");
        break;
      }
    } else {
      // Even rows: outer thirds are literal 3s, middle third triples the
      // previous steeple.
      std::size_t third = s.values.size() / 3;
      bool ok = s.values.size() == 3 * prev.values.size();
      for (std::size_t i = 0; ok && i < third; ++i) {
        ok = s.values[i] == 3 && s.values[2 * third + i] == 3;
      }
      for (std::size_t i = 0; ok && i < third; ++i) {
        ok = s.values[third + i] == 3 * prev.values[i];
      }
      if (!ok) {
        failure.note("row " + std::to_string(n) +
                     " steeple does not follow the even-row pattern");
        break;
      }
    }
    prev = std::move(s);
  }
  return finish("steeples", failure, checks,
                "steeple lengths, symmetry, flanks and recurrence hold on "
                "rows 0.." +
                    std::to_string(max_n));
}

std::vector<SuiteResult> verify_all() {
  std::vector<SuiteResult> results;
  results.push_back(verify_reduction(10));
  results.push_back(verify_counts(10));
  results.push_back(verify_mod9(8));
  results.push_back(verify_palindrome(9));
  results.push_back(verify_oracle_equivalence(9));
  results.push_back(verify_completeness(8, 15));
  results.push_back(verify_steeples(10));
  return results;
}

std::string format_result(const SuiteResult& result) {
  std::string line = result.name;
  line += result.pass ? ": PASS" : ": FAIL";
  line += " (checks=" + std::to_string(result.checks);
  if (!result.detail.empty()) line += "; " + result.detail;
  line += ")";
  return line;
}

}  // namespace wmsb
