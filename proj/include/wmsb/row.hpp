#pragma once

#include <wmsb/fraction.hpp>
#include <wmsb/integer.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wmsb {

// Default ceiling on the row index for generation. Row n of a weight-k tree
// has k^n + 1 terms, so this is a guard against accidental k^40-sized
// requests, not a tuning knob.
inline constexpr unsigned kDefaultRowCap = 20;

struct RowSpec {
  unsigned k = 3;
  Fraction start_left{0, 1};
  Fraction start_right{1, 1};
  unsigned n = 0;
  bool reduce = true;
};

inline RowSpec unit_row_spec(unsigned n) { return RowSpec{3, {0, 1}, {1, 1}, n, true}; }
inline RowSpec no_reduction_row_spec(unsigned n) { return RowSpec{3, {0, 1}, {1, 1}, n, false}; }

// Requires k >= 2 and start_left < start_right by value.
void validate(const RowSpec& spec);

class RowLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Number of terms in row n: k^n + 1.
Integer row_size(const RowSpec& spec);

// Streams one row left to right in O(k*n) memory via depth-first descent
// into the gaps of the start pair. Mediants are recomputed per gap rather
// than stored row-by-row, which keeps memory flat while row sizes grow as
// 3^n.
class RowStream {
 public:
  explicit RowStream(RowSpec spec, unsigned row_cap = kDefaultRowCap);

  // Next term, or nullopt after the row's final term.
  std::optional<Fraction> next();

 private:
  struct Gap {
    Fraction left;
    Fraction right;
    unsigned depth;  // rows still to descend below this gap
  };

  RowSpec spec_;
  std::vector<Gap> stack_;
  bool start_emitted_ = false;
};

std::vector<Fraction> materialize_row(const RowSpec& spec,
                                      unsigned row_cap = kDefaultRowCap);

// Calls fn(left, right) for each adjacent pair of the row, streaming.
template <typename Fn>
void for_each_adjacent_pair(const RowSpec& spec, Fn&& fn,
                            unsigned row_cap = kDefaultRowCap) {
  RowStream stream(spec, row_cap);
  std::optional<Fraction> prev = stream.next();
  while (std::optional<Fraction> cur = stream.next()) {
    fn(*prev, *cur);
    prev = std::move(cur);
  }
}

struct RowPosition {
  unsigned row = 0;
  Integer index{0};  // 0-based position within the row

  friend bool operator==(const RowPosition&, const RowPosition&) = default;
};

// First row of the reduced unit tree that contains the given value, found by
// monotone descent (a target first appears as a mediant of the gap that
// brackets it, so the search never materializes a row). Matches by rational
// value; returns nullopt if the value is outside [0, 1] or does not appear
// by row max_n.
std::optional<RowPosition> find_fraction(const Fraction& target, unsigned max_n);

// Same contract, by brute-force row scan. Exists to cross-check the descent.
std::optional<RowPosition> find_fraction_by_scan(const Fraction& target,
                                                 unsigned max_n,
                                                 unsigned row_cap = kDefaultRowCap);

}  // namespace wmsb
