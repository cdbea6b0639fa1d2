#pragma once

#include <wmsb/fraction.hpp>
#include <wmsb/integer.hpp>

#include <optional>
#include <ostream>
#include <string_view>

namespace wmsb {

enum class RowFormat { text, json, csv };
enum class ValueFormat { text, json, csv, log3 };

std::optional<RowFormat> parse_row_format(std::string_view name);
std::optional<ValueFormat> parse_value_format(std::string_view name);

// Streams a row of fractions: text is one "num/den" per line, json a single
// array of "num/den" strings, csv "index,num,den" with a header line.
class RowWriter {
 public:
  RowWriter(std::ostream& out, RowFormat format);
  void add(const Fraction& f);
  void finish();

 private:
  std::ostream& out_;
  RowFormat format_;
  Integer index_{0};
};

// Streams cross-difference values: text is one decimal per line, json a
// single array of decimal strings, csv "index,value,log3" (log3 blank for a
// non-power-of-3 value), log3 one character per value on one line (throws
// std::domain_error on values that are not powers of 3).
class ValueWriter {
 public:
  ValueWriter(std::ostream& out, ValueFormat format);
  void add(const Integer& v);
  void finish();

 private:
  std::ostream& out_;
  ValueFormat format_;
  Integer index_{0};
};

}  // namespace wmsb
