#pragma once

#include <wmsb/integer.hpp>
#include <wmsb/row.hpp>

#include <cstddef>
#include <vector>

namespace wmsb {

// Ceiling on the row index for operations that materialize a whole
// cross-difference row (3^16 values is already ~43M); streaming paths are
// governed by kDefaultRowCap instead.
inline constexpr unsigned kMaterializeCap = 16;

struct CrossDiffRow {
  unsigned n = 0;
  std::vector<Integer> values;  // one per gap, 3^n of them for k = 3

  friend bool operator==(const CrossDiffRow&, const CrossDiffRow&) = default;
};

// Ground truth: generate the fractions of the row and take adjacent
// cross-differences.
CrossDiffRow crossdiffs_from_fractions(const RowSpec& spec,
                                       unsigned row_cap = kDefaultRowCap);

// One no-reduction propagation step: every gap value V spawns (V, 3V, V).
// Exact for any start pair when k = 3 and reduction is off.
CrossDiffRow propagate_no_reduction(const CrossDiffRow& row);

// One reduced-unit-case propagation step: V spawns (V, 3V, V) when V == 1 or
// V is a strict local maximum of its row, else (V/3, V/3, V/3). Exact for
// the unit start 0/1, 1/1; throws std::domain_error if a non-maximal V is
// not divisible by 3 (the row cannot then be a unit-case row).
CrossDiffRow propagate_unit(const CrossDiffRow& row);

// True when values[i] is strictly greater than each existing neighbor.
bool is_strict_local_max(const CrossDiffRow& row, std::size_t i);

// Row n of the unit tree by iterated propagation from C_0 = {1}.
CrossDiffRow unit_crossdiff_row(unsigned n);

// Row n of the no-reduction unit tree, same start, reduction off.
CrossDiffRow no_reduction_row(unsigned n);

struct Steeple {
  std::size_t start = 0;  // first gap index of the run
  std::size_t end = 0;    // one past the last gap index
  std::vector<Integer> values;

  friend bool operator==(const Steeple&, const Steeple&) = default;
};

// The maximal run of values > 1 around the middle gap (3^n - 1)/2. For n >= 1
// it has length 3^floor(n/2); for n = 0 the middle value is 1 and the run is
// empty (start == end == 0).
Steeple extract_steeple(const CrossDiffRow& row);

}  // namespace wmsb
