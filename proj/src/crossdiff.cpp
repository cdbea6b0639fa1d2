#include <wmsb/crossdiff.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace wmsb {

namespace {

void check_materialize(unsigned n) {
  if (n > kMaterializeCap) {
    throw RowLimitError("cross-difference row " + std::to_string(n) +
                        " exceeds the materialization cap " +
                        std::to_string(kMaterializeCap));
  }
}

}  // namespace

CrossDiffRow crossdiffs_from_fractions(const RowSpec& spec, unsigned row_cap) {
  validate(spec);
  check_materialize(spec.n);
  CrossDiffRow row{spec.n, {}};
  row.values.reserve(static_cast<std::size_t>(ipow(spec.k, spec.n)));
  for_each_adjacent_pair(
      spec,
      [&row](const Fraction& left, const Fraction& right) {
        row.values.push_back(cross_difference(left, right));
      },
      row_cap);
  return row;
}

CrossDiffRow propagate_no_reduction(const CrossDiffRow& row) {
  check_materialize(row.n + 1);
  CrossDiffRow next{row.n + 1, {}};
  next.values.reserve(row.values.size() * 3);
  for (const Integer& v : row.values) {
    next.values.push_back(v);
    next.values.push_back(3 * v);
    next.values.push_back(v);
  }
  return next;
}

bool is_strict_local_max(const CrossDiffRow& row, std::size_t i) {
  if (i >= row.values.size()) {
    throw std::out_of_range("gap index " + std::to_string(i) +
                            " outside row of size " +
                            std::to_string(row.values.size()));
  }
  const std::vector<Integer>& v = row.values;
  bool left_ok = i == 0 || v[i] > v[i - 1];
  bool right_ok = i + 1 == v.size() || v[i] > v[i + 1];
  return left_ok && right_ok;
}

CrossDiffRow propagate_unit(const CrossDiffRow& row) {
  check_materialize(row.n + 1);
  CrossDiffRow next{row.n + 1, {}};
  next.values.reserve(row.values.size() * 3);
  for (std::size_t i = 0; i < row.values.size(); ++i) {
    const Integer& v = row.values[i];
    if (v == 1 || is_strict_local_max(row, i)) {
      next.values.push_back(v);
      next.values.push_back(3 * v);
      next.values.push_back(v);
    } else {
      if (v % 3 != 0) {
        throw std::domain_error("value " + v.str() + " at gap " +
                                std::to_string(i) +
                                " is neither 1 nor a local maximum nor "
                                "divisible by 3; not a unit-case row");
      }
      Integer third = v / 3;
      next.values.push_back(third);
      next.values.push_back(third);
      next.values.push_back(std::move(third));
    }
  }
  return next;
}

CrossDiffRow unit_crossdiff_row(unsigned n) {
  check_materialize(n);
  CrossDiffRow row{0, {Integer(1)}};
  for (unsigned i = 0; i < n; ++i) row = propagate_unit(row);
  return row;
}

CrossDiffRow no_reduction_row(unsigned n) {
  check_materialize(n);
  CrossDiffRow row{0, {Integer(1)}};
  for (unsigned i = 0; i < n; ++i) row = propagate_no_reduction(row);
  return row;
}

Steeple extract_steeple(const CrossDiffRow& row) {
  if (row.values.empty()) {
    throw std::invalid_argument("cannot take the steeple of an empty row");
  }
  std::size_t middle = (row.values.size() - 1) / 2;
  if (row.values[middle] == 1) {
    // Row 0 only: the middle value is 1 and the 1-free run is empty.
    return Steeple{middle, middle, {}};
  }
  std::size_t start = middle;
  while (start > 0 && row.values[start - 1] > 1) --start;
  std::size_t end = middle + 1;
  while (end < row.values.size() && row.values[end] > 1) ++end;
  Steeple s{start, end, {}};
  s.values.assign(row.values.begin() + static_cast<std::ptrdiff_t>(start),
                  row.values.begin() + static_cast<std::ptrdiff_t>(end));
  return s;
}

}  // namespace wmsb
