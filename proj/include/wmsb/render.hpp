#pragma once

#include <wmsb/crossdiff.hpp>
#include <wmsb/integer.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace wmsb {

// Bar heights for one cross-difference row on a log-3 scale: level[i] = e
// where values[i] = 3^e. Throws std::domain_error on a non-power-of-3 value.
struct StepPlot {
  unsigned n = 0;
  std::vector<unsigned> levels;

  friend bool operator==(const StepPlot&, const StepPlot&) = default;
};

StepPlot step_plot(const CrossDiffRow& row);

// One bit row per iteration: bits[i][j] tells whether gap j of row i is
// marked. Iteration i has 3^i entries; rendering stretches each entry to
// 3^(n-i) columns so all iterations align.
struct IntervalBitmap {
  unsigned n = 0;
  std::vector<std::vector<bool>> bits;  // bits[0] .. bits[n]

  friend bool operator==(const IntervalBitmap&, const IntervalBitmap&) = default;
};

// Marks the gaps whose no-reduction value is 1: the indices with no ternary
// digit 1, i.e. the kept intervals of the Cantor middle-thirds construction,
// 2^i marks in iteration i.
IntervalBitmap cantor_bitmap(unsigned n);

// Marks the gaps of the reduced unit row with value 1.
IntervalBitmap ones_bitmap(unsigned n);

// Log-3 levels of the steeples of unit rows 1..max_n, concatenated in row
// order with a single 0 between consecutive rows (steeple values are all
// > 1, so 0 cannot occur inside a block).
std::vector<unsigned> steeple_strip(unsigned max_n);

// Deterministic SVG: fixed canvas, integer coordinates, one rect per bar or
// mark, no timestamps or generator tags; byte-identical across runs.
std::string to_svg(const StepPlot& plot);
std::string to_svg(const IntervalBitmap& bitmap);
std::string to_svg_steeples(unsigned max_n);

// Text forms: the step plot as one digit/letter per gap (0-9 then a, b, ...),
// the bitmap as one line per iteration with '#' marks and '.' fills.
char level_char(unsigned level);
std::string to_text(const StepPlot& plot);
std::string to_text(const IntervalBitmap& bitmap);
std::string to_text_steeples(unsigned max_n);

}  // namespace wmsb
