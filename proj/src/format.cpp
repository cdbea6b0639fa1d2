#include <wmsb/format.hpp>

#include <wmsb/render.hpp>

namespace wmsb {

std::optional<RowFormat> parse_row_format(std::string_view name) {
  if (name == "text") return RowFormat::text;
  if (name == "json") return RowFormat::json;
  if (name == "csv") return RowFormat::csv;
  return std::nullopt;
}

std::optional<ValueFormat> parse_value_format(std::string_view name) {
  if (name == "text") return ValueFormat::text;
  if (name == "json") return ValueFormat::json;
  if (name == "csv") return ValueFormat::csv;
  if (name == "log3") return ValueFormat::log3;
  return std::nullopt;
}

RowWriter::RowWriter(std::ostream& out, RowFormat format)
    : out_(out), format_(format) {
  switch (format_) {
    case RowFormat::text:
      break;
    case RowFormat::json:
      out_ << "[";
      break;
    case RowFormat::csv:
      out_ << "index,num,den\n";
      break;
  }
}

void RowWriter::add(const Fraction& f) {
  switch (format_) {
    case RowFormat::text:
      out_ << to_string(f) << "\n";
      break;
    case RowFormat::json:
      if (index_ != 0) out_ << ",";
      out_ << "\"" << to_string(f) << "\"";
      break;
    case RowFormat::csv:
      out_ << index_ << "," << f.num << "," << f.den << "\n";
      break;
  }
  index_ += 1;
}

void RowWriter::finish() {
  if (format_ == RowFormat::json) out_ << "]\n";
}

ValueWriter::ValueWriter(std::ostream& out, ValueFormat format)
    : out_(out), format_(format) {
  switch (format_) {
    case ValueFormat::text:
    case ValueFormat::log3:
      break;
    case ValueFormat::json:
      out_ << "[";
      break;
    case ValueFormat::csv:
      out_ << "index,value,log3\n";
      break;
  }
}

void ValueWriter::add(const Integer& v) {
  switch (format_) {
    case ValueFormat::text:
      out_ << v << "\n";
      break;
    case ValueFormat::json:
      if (index_ != 0) out_ << ",";
      out_ << "\"" << v << "\"";
      break;
    case ValueFormat::csv: {
      out_ << index_ << "," << v << ",";
      if (std::optional<unsigned> e = log3_exact(v)) out_ << *e;
      out_ << "\n";
      break;
    }
    case ValueFormat::log3: {
      std::optional<unsigned> e = log3_exact(v);
      if (!e) {
        throw std::domain_error("value " + v.str() +
                                " is not a power of 3; log3 format needs "
                                "power-of-3 rows");
      }
      out_ << level_char(*e);
      break;
    }
  }
  index_ += 1;
}

void ValueWriter::finish() {
  switch (format_) {
    case ValueFormat::text:
      break;
    case ValueFormat::json:
      out_ << "]\n";
      break;
    case ValueFormat::csv:
      break;
    case ValueFormat::log3:
      out_ << "\n";
      break;
  }
}

}  // namespace wmsb
