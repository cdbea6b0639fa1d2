#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wmsb/crossdiff.hpp>
#include <wmsb/ternary.hpp>

#include <random>
#include <stdexcept>
#include <vector>

using namespace wmsb;

namespace {

std::vector<Integer> ints(const std::vector<int>& v) {
  return std::vector<Integer>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("unit cross-difference rows 0 through 3") {
  CHECK(crossdiffs_from_fractions(unit_row_spec(0)).values == ints({1}));
  CHECK(crossdiffs_from_fractions(unit_row_spec(1)).values == ints({1, 3, 1}));
  CHECK(crossdiffs_from_fractions(unit_row_spec(2)).values ==
        ints({1, 3, 1, 3, 9, 3, 1, 3, 1}));
  CHECK(crossdiffs_from_fractions(unit_row_spec(3)).values ==
        ints({1, 3, 1, 3, 9, 3, 1, 3, 1, 1, 1, 1, 9, 27,
              9, 1, 1, 1, 1, 3, 1, 3, 9, 3, 1, 3, 1}));
}

TEST_CASE("unit propagation reproduces the fraction rows") {
  CrossDiffRow rolling{0, {Integer(1)}};
  for (unsigned n = 0; n <= 6; ++n) {
    if (n > 0) rolling = propagate_unit(rolling);
    CHECK(rolling == crossdiffs_from_fractions(unit_row_spec(n)));
    CHECK(rolling == unit_crossdiff_row(n));
  }
}

TEST_CASE("no-reduction propagation spawns V, 3V, V everywhere") {
  CHECK(no_reduction_row(2).values == ints({1, 3, 1, 3, 9, 3, 1, 3, 1}));
  CHECK(no_reduction_row(3).values ==
        ints({1, 3, 1, 3, 9, 3, 1, 3, 1, 3, 9, 3, 9, 27,
              9, 3, 9, 3, 1, 3, 1, 3, 9, 3, 1, 3, 1}));
  // Matches the raw fraction rows directly.
  for (unsigned n = 0; n <= 6; ++n) {
    CHECK(no_reduction_row(n) ==
          crossdiffs_from_fractions(no_reduction_row_spec(n)));
  }
  // The reduced and raw rows first differ across the 6/15 reduction.
  CHECK(unit_crossdiff_row(3).values[9] == 1);
  CHECK(no_reduction_row(3).values[9] == 3);
}

TEST_CASE("no-reduction rows scale with the starting cross-difference") {
  std::mt19937_64 rng(0x77313370031ULL);
  int tried = 0;
  for (int trial = 0; trial < 60; ++trial) {
    unsigned n = static_cast<unsigned>(rng() % 5);
    Fraction l{rng() % 40, rng() % 40 + 1};
    Fraction r{rng() % 40, rng() % 40 + 1};
    if (!value_less(l, r)) continue;
    ++tried;
    RowSpec spec{3, l, r, n, false};
    CrossDiffRow row = crossdiffs_from_fractions(spec);
    Integer scale = cross_difference(l, r);
    bool ok = true;
    for (std::size_t i = 0; ok && i < row.values.size(); ++i) {
      ok = row.values[i] == scale * no_reduction_value(Integer(i));
    }
    CHECK(ok);
  }
  CHECK(tried > 30);
}

TEST_CASE("unit propagation rejects rows it cannot have produced") {
  CrossDiffRow bogus{1, ints({1, 2, 2})};
  CHECK_THROWS_AS(propagate_unit(bogus), std::domain_error);
}

TEST_CASE("strict local maxima") {
  CrossDiffRow single{0, ints({1})};
  CHECK(is_strict_local_max(single, 0));
  CrossDiffRow plateau{1, ints({3, 3})};
  CHECK_FALSE(is_strict_local_max(plateau, 0));
  CHECK_FALSE(is_strict_local_max(plateau, 1));
  CrossDiffRow peak{1, ints({1, 3, 1})};
  CHECK(is_strict_local_max(peak, 1));
  CHECK_FALSE(is_strict_local_max(peak, 0));
  CHECK_THROWS_AS(is_strict_local_max(peak, 3), std::out_of_range);
}

TEST_CASE("steeples of the first rows") {
  CHECK(extract_steeple(unit_crossdiff_row(0)) == Steeple{0, 0, {}});
  CHECK(extract_steeple(unit_crossdiff_row(1)) == Steeple{1, 2, ints({3})});
  CHECK(extract_steeple(unit_crossdiff_row(2)) ==
        Steeple{3, 6, ints({3, 9, 3})});
  CHECK(extract_steeple(unit_crossdiff_row(3)) ==
        Steeple{12, 15, ints({9, 27, 9})});
  CHECK(extract_steeple(unit_crossdiff_row(4)) ==
        Steeple{36, 45, ints({3, 3, 3, 27, 81, 27, 3, 3, 3})});
}

TEST_CASE("materialization caps") {
  CHECK_THROWS_AS(crossdiffs_from_fractions(unit_row_spec(kMaterializeCap + 1)),
                  RowLimitError);
  CHECK_THROWS_AS(unit_crossdiff_row(kMaterializeCap + 1), RowLimitError);
  CHECK_THROWS_AS(no_reduction_row(kMaterializeCap + 1), RowLimitError);
  CrossDiffRow at_cap{kMaterializeCap, ints({1})};
  CHECK_THROWS_AS(propagate_unit(at_cap), RowLimitError);
  CHECK_THROWS_AS(propagate_no_reduction(at_cap), RowLimitError);
}

TEST_CASE("each row is a prefix of the next") {
  CrossDiffRow prev = unit_crossdiff_row(0);
  for (unsigned n = 1; n <= 7; ++n) {
    CrossDiffRow cur = unit_crossdiff_row(n);
    bool prefix = true;
    for (std::size_t i = 0; prefix && i < prev.values.size(); ++i) {
      prefix = cur.values[i] == prev.values[i];
    }
    CHECK(prefix);
    // And by the palindrome, a mirrored suffix as well.
    bool suffix = true;
    for (std::size_t i = 0; suffix && i < prev.values.size(); ++i) {
      suffix = cur.values[cur.values.size() - 1 - i] ==
               prev.values[prev.values.size() - 1 - i];
    }
    CHECK(suffix);
    prev = std::move(cur);
  }
}

TEST_CASE("value-1 gaps carry embedded copies of the whole cascade") {
  // If gap i of row n has value 1, rows n+m restrict on i's subtree to a
  // copy of row m.
  for (unsigned n = 0; n <= 5; ++n) {
    CrossDiffRow base = unit_crossdiff_row(n);
    for (unsigned m = 1; m <= 3; ++m) {
      CrossDiffRow deep = unit_crossdiff_row(n + m);
      CrossDiffRow copy = unit_crossdiff_row(m);
      std::size_t stride = copy.values.size();
      for (std::size_t i = 0; i < base.values.size(); ++i) {
        if (base.values[i] != 1) continue;
        bool ok = true;
        for (std::size_t t = 0; ok && t < stride; ++t) {
          ok = deep.values[i * stride + t] == copy.values[t];
        }
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(i);
        CHECK(ok);
      }
    }
  }
}
