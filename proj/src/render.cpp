#include <wmsb/render.hpp>

#include <wmsb/ternary.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace wmsb {

namespace {

constexpr int kSvgWidth = 900;
constexpr int kSvgHeight = 300;
constexpr const char* kBarFill = "#336699";

// All geometry is expressed in integer viewBox units and stretched to the
// fixed canvas with preserveAspectRatio="none", so no floating point ever
// reaches the output and renders are byte-stable.
void open_svg(std::ostringstream& out, const Integer& units_x, unsigned units_y) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSvgWidth
      << "\" height=\"" << kSvgHeight << "\" viewBox=\"0 0 " << units_x << " "
      << units_y << "\" preserveAspectRatio=\"none\">\n";
}

void bar(std::ostringstream& out, const Integer& x, unsigned y,
         const Integer& width, unsigned height) {
  out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << width
      << "\" height=\"" << height << "\" fill=\"" << kBarFill << "\"/>\n";
}

}  // namespace

StepPlot step_plot(const CrossDiffRow& row) {
  StepPlot plot{row.n, {}};
  plot.levels.reserve(row.values.size());
  for (const Integer& v : row.values) {
    std::optional<unsigned> e = log3_exact(v);
    if (!e) {
      throw std::domain_error("value " + v.str() +
                              " is not a power of 3; no log-3 plot");
    }
    plot.levels.push_back(*e);
  }
  return plot;
}

IntervalBitmap cantor_bitmap(unsigned n) {
  IntervalBitmap bitmap{n, {{true}}};
  for (unsigned i = 1; i <= n; ++i) {
    const std::vector<bool>& prev = bitmap.bits.back();
    std::vector<bool> next;
    next.reserve(prev.size() * 3);
    // A gap keeps its mark in the two outer thirds and never in the middle
    // one, exactly the (V, 3V, V) spawn pattern restricted to value 1.
    for (bool b : prev) {
      next.push_back(b);
      next.push_back(false);
      next.push_back(b);
    }
    bitmap.bits.push_back(std::move(next));
  }
  return bitmap;
}

IntervalBitmap ones_bitmap(unsigned n) {
  IntervalBitmap bitmap{n, {}};
  bitmap.bits.reserve(n + 1);
  for (unsigned i = 0; i <= n; ++i) {
    std::vector<bool> row;
    std::size_t size = 1;
    for (unsigned j = 0; j < i; ++j) size *= 3;
    row.reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
      row.push_back(unit_value(Integer(j), i) == 1);
    }
    bitmap.bits.push_back(std::move(row));
  }
  return bitmap;
}

std::vector<unsigned> steeple_strip(unsigned max_n) {
  std::vector<unsigned> strip;
  CrossDiffRow row = unit_crossdiff_row(0);
  for (unsigned n = 1; n <= max_n; ++n) {
    row = propagate_unit(row);
    if (n > 1) strip.push_back(0);
    for (const Integer& v : extract_steeple(row).values) {
      std::optional<unsigned> e = log3_exact(v);
      if (!e) throw std::domain_error("steeple value is not a power of 3");
      strip.push_back(*e);
    }
  }
  return strip;
}

std::string to_svg(const StepPlot& plot) {
  std::ostringstream out;
  open_svg(out, Integer(plot.levels.size()), plot.n + 1);
  // Bars get height level + 1 so a level-0 gap still shows as a baseline
  // tick; one rect per gap.
  for (std::size_t i = 0; i < plot.levels.size(); ++i) {
    bar(out, Integer(i), plot.n - plot.levels[i], Integer(1),
        plot.levels[i] + 1);
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_svg(const IntervalBitmap& bitmap) {
  std::ostringstream out;
  Integer columns = pow3(bitmap.n);
  open_svg(out, columns, bitmap.n + 1);
  // One rect per mark, stretched so iteration i's 3^i entries span the full
  // width; unmarked gaps emit nothing.
  for (unsigned i = 0; i < bitmap.bits.size(); ++i) {
    Integer span = pow3(bitmap.n - i);
    for (std::size_t j = 0; j < bitmap.bits[i].size(); ++j) {
      if (!bitmap.bits[i][j]) continue;
      bar(out, Integer(j) * span, i, span, 1);
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_svg_steeples(unsigned max_n) {
  std::vector<unsigned> strip = steeple_strip(max_n);
  unsigned top = 0;
  for (unsigned level : strip) top = std::max(top, level);
  std::ostringstream out;
  open_svg(out, Integer(strip.size()), top + 1);
  for (std::size_t i = 0; i < strip.size(); ++i) {
    bar(out, Integer(i), top - strip[i], Integer(1), strip[i] + 1);
  }
  out << "</svg>\n";
  return out.str();
}

char level_char(unsigned level) {
  if (level < 10) return static_cast<char>('0' + level);
  if (level < 36) return static_cast<char>('a' + (level - 10));
  throw std::invalid_argument("level " + std::to_string(level) +
                              " has no single-character form");
}

std::string to_text(const StepPlot& plot) {
  std::string line;
  line.reserve(plot.levels.size() + 1);
  for (unsigned level : plot.levels) line.push_back(level_char(level));
  line.push_back('\n');
  return line;
}

std::string to_text(const IntervalBitmap& bitmap) {
  std::string text;
  std::size_t span = 1;
  for (unsigned i = 0; i < bitmap.n; ++i) span *= 3;
  for (const std::vector<bool>& row : bitmap.bits) {
    for (bool b : row) text.append(span, b ? '#' : '.');
    text.push_back('\n');
    span /= 3;
  }
  return text;
}

std::string to_text_steeples(unsigned max_n) {
  std::string line;
  for (unsigned level : steeple_strip(max_n)) line.push_back(level_char(level));
  line.push_back('\n');
  return line;
}

}  // namespace wmsb
