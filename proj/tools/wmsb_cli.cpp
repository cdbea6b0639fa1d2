// Command-line front end: rows, cross-difference rows (by three independent
// constructions), single-gap queries, the verification suites and the
// quasi-fractal renders.
//
// Exit codes: 0 success, 2 invalid arguments or malformed input, 3 resource
// cap exceeded, 4 method disagreement under --check, 5 verification failure,
// 6 output I/O failure.

#include <CLI11.hpp>

#include <wmsb/analytics.hpp>
#include <wmsb/crossdiff.hpp>
#include <wmsb/format.hpp>
#include <wmsb/fraction.hpp>
#include <wmsb/integer.hpp>
#include <wmsb/render.hpp>
#include <wmsb/row.hpp>
#include <wmsb/ternary.hpp>
#include <wmsb/verify.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace wmsb;

constexpr int kOk = 0;
constexpr int kBadArgs = 2;
constexpr int kResourceCap = 3;
constexpr int kMethodMismatch = 4;
constexpr int kVerifyFailure = 5;
constexpr int kIoFailure = 6;

struct Options {
  unsigned n = 0;
  unsigned k = 3;
  std::string start = "0/1,1/1";
  bool no_reduce = false;
  unsigned row_cap = kDefaultRowCap;
  std::string format = "text";
  std::string method = "fractions";
  bool check = false;
  bool probe_rule = false;
  std::string output = "-";
  std::string index;
  std::optional<unsigned> row;
  std::string suite = "all";
  std::string what;
};

// Writes to stdout for "-", else to the named file. Binary mode keeps SVG
// output byte-identical across platforms.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      ok_ = file_.is_open();
    }
  }

  bool ok() const { return ok_; }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  bool flush() {
    stream().flush();
    return stream().good();
  }

 private:
  std::ofstream file_;
  bool ok_ = true;
};

RowSpec make_spec(const Options& opt) {
  std::size_t comma = opt.start.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("start pair must look like '0/1,1/1'");
  }
  RowSpec spec{opt.k, parse_fraction(opt.start.substr(0, comma)),
               parse_fraction(opt.start.substr(comma + 1)), opt.n,
               !opt.no_reduce};
  validate(spec);
  return spec;
}

bool is_unit_start(const RowSpec& spec) {
  return spec.k == 3 && spec.start_left == Fraction{0, 1} &&
         spec.start_right == Fraction{1, 1};
}

// The propagation rule and the ternary oracle are k = 3 constructions; with
// reduction on they are additionally specific to the unit start.
void require_rule_scope(const RowSpec& spec, const std::string& method) {
  if (spec.k != 3) {
    throw std::invalid_argument("method '" + method + "' needs k = 3");
  }
  if (spec.reduce && !is_unit_start(spec)) {
    throw std::invalid_argument(
        "method '" + method +
        "' with reduction needs the unit start 0/1,1/1 (use --probe-rule to "
        "explore other starts)");
  }
}

CrossDiffRow crossdiff_by_rule(const RowSpec& spec) {
  require_rule_scope(spec, "rule");
  CrossDiffRow row{0, {cross_difference(spec.start_left, spec.start_right)}};
  for (unsigned i = 0; i < spec.n; ++i) {
    row = spec.reduce ? propagate_unit(row) : propagate_no_reduction(row);
  }
  return row;
}

CrossDiffRow crossdiff_by_oracle(const RowSpec& spec) {
  require_rule_scope(spec, "oracle");
  if (spec.n > kMaterializeCap) {
    throw RowLimitError("cross-difference row " + std::to_string(spec.n) +
                        " exceeds the materialization cap " +
                        std::to_string(kMaterializeCap));
  }
  CrossDiffRow row{spec.n, {}};
  Integer size = pow3(spec.n);
  row.values.reserve(static_cast<std::size_t>(size));
  Integer scale = cross_difference(spec.start_left, spec.start_right);
  for (Integer i = 0; i < size; ++i) {
    if (spec.reduce) {
      row.values.push_back(unit_value(i, spec.n));
    } else {
      row.values.push_back(scale * no_reduction_value(i));
    }
  }
  return row;
}

CrossDiffRow crossdiff_by_method(const RowSpec& spec, const std::string& method,
                                 unsigned row_cap) {
  if (method == "fractions") return crossdiffs_from_fractions(spec, row_cap);
  if (method == "rule") return crossdiff_by_rule(spec);
  if (method == "oracle") return crossdiff_by_oracle(spec);
  throw std::invalid_argument("unknown method '" + method +
                              "' (fractions, rule, oracle)");
}

int run_row(const Options& opt) {
  RowSpec spec = make_spec(opt);
  std::optional<RowFormat> format = parse_row_format(opt.format);
  if (!format) {
    throw std::invalid_argument("unknown row format '" + opt.format +
                                "' (text, json, csv)");
  }
  Output out(opt.output);
  if (!out.ok()) {
    std::cerr << "error: cannot open '" << opt.output << "'\n";
    return kIoFailure;
  }
  RowWriter writer(out.stream(), *format);
  RowStream stream(spec, opt.row_cap);
  while (std::optional<Fraction> f = stream.next()) writer.add(*f);
  writer.finish();
  return out.flush() ? kOk : kIoFailure;
}

int run_crossdiff_check(const Options& opt, const RowSpec& spec) {
  std::vector<std::string> methods = {"fractions"};
  if (spec.k == 3 && (!spec.reduce || is_unit_start(spec))) {
    methods.push_back("rule");
    methods.push_back("oracle");
  }
  if (methods.size() == 1) {
    throw std::invalid_argument(
        "--check has no independent construction for this configuration "
        "(needs k = 3, and the unit start when reduction is on)");
  }
  CrossDiffRow reference = crossdiffs_from_fractions(spec, opt.row_cap);
  for (std::size_t m = 1; m < methods.size(); ++m) {
    CrossDiffRow other = crossdiff_by_method(spec, methods[m], opt.row_cap);
    for (std::size_t i = 0; i < reference.values.size(); ++i) {
      if (reference.values[i] != other.values[i]) {
        std::cerr << "mismatch at row " << spec.n << " gap " << i
                  << ": fractions give " << reference.values[i] << ", "
                  << methods[m] << " gives " << other.values[i] << "\n";
        return kMethodMismatch;
      }
    }
  }
  std::cout << "row " << spec.n << ": " << reference.values.size()
            << " gaps agree across";
  for (const std::string& m : methods) std::cout << " " << m;
  std::cout << "\n";
  return kOk;
}

int run_crossdiff_probe(const Options& opt, const RowSpec& spec) {
  if (spec.k != 3) {
    throw std::invalid_argument("--probe-rule needs k = 3");
  }
  CrossDiffRow by_rule{0,
                       {cross_difference(spec.start_left, spec.start_right)}};
  std::cout << "probing the " << (spec.reduce ? "unit" : "no-reduction")
            << " propagation rule against fractions, start "
            << to_string(spec.start_left) << "," << to_string(spec.start_right)
            << "\n";
  for (unsigned n = 0; n <= spec.n; ++n) {
    if (n > 0) {
      try {
        by_rule =
            spec.reduce ? propagate_unit(by_rule) : propagate_no_reduction(by_rule);
      } catch (const std::domain_error& e) {
        std::cout << "row " << n << ": rule not applicable (" << e.what()
                  << ")\n";
        return kOk;
      }
    }
    RowSpec level = spec;
    level.n = n;
    CrossDiffRow by_fractions = crossdiffs_from_fractions(level, opt.row_cap);
    bool same = by_fractions.values == by_rule.values;
    if (!same) {
      for (std::size_t i = 0; i < by_fractions.values.size(); ++i) {
        if (by_fractions.values[i] != by_rule.values[i]) {
          std::cout << "row " << n << ": diverges at gap " << i
                    << " (fractions " << by_fractions.values[i] << ", rule "
                    << by_rule.values[i] << ")\n";
          return kOk;
        }
      }
    }
    std::cout << "row " << n << ": rule matches fractions ("
              << by_fractions.values.size() << " gaps)\n";
  }
  return kOk;
}

int run_crossdiff(const Options& opt) {
  RowSpec spec = make_spec(opt);
  if (opt.probe_rule) return run_crossdiff_probe(opt, spec);
  if (opt.check) return run_crossdiff_check(opt, spec);
  std::optional<ValueFormat> format = parse_value_format(opt.format);
  if (!format) {
    throw std::invalid_argument("unknown cross-difference format '" +
                                opt.format + "' (text, json, csv, log3)");
  }
  CrossDiffRow row = crossdiff_by_method(spec, opt.method, opt.row_cap);
  Output out(opt.output);
  if (!out.ok()) {
    std::cerr << "error: cannot open '" << opt.output << "'\n";
    return kIoFailure;
  }
  ValueWriter writer(out.stream(), *format);
  for (const Integer& v : row.values) writer.add(v);
  writer.finish();
  return out.flush() ? kOk : kIoFailure;
}

int run_query(const Options& opt) {
  Integer index = parse_decimal(opt.index);
  Integer value;
  if (opt.no_reduce) {
    if (opt.row) {
      // Validates the index against the row width; the value itself is
      // width-independent.
      TernaryIndex t(index, *opt.row);
      value = no_reduction_value(t.value());
    } else {
      value = no_reduction_value(index);
    }
    std::cout << "row " << (opt.row ? std::to_string(*opt.row) : "infinity")
              << " (no reduction)\n";
  } else if (opt.row) {
    value = unit_value(index, *opt.row);
    std::cout << "row " << *opt.row << "\n";
  } else {
    value = infinite_unit_value(index);
    std::cout << "row infinity\n";
  }
  std::cout << "index " << index << "\n";
  std::cout << "value " << value << "\n";
  std::optional<unsigned> e = log3_exact(value);
  std::cout << "log3 " << (e ? std::to_string(*e) : "-") << "\n";
  return kOk;
}

int run_verify(const Options& opt) {
  std::vector<SuiteResult> results;
  if (opt.suite == "all") {
    results = verify_all();
  } else if (opt.suite == "reduction-law") {
    results.push_back(verify_reduction(10));
  } else if (opt.suite == "counts") {
    results.push_back(verify_counts(10));
  } else if (opt.suite == "mod9") {
    results.push_back(verify_mod9(8));
  } else if (opt.suite == "palindrome") {
    results.push_back(verify_palindrome(9));
  } else if (opt.suite == "oracle-equivalence") {
    results.push_back(verify_oracle_equivalence(9));
  } else if (opt.suite == "completeness") {
    results.push_back(verify_completeness(8, 15));
  } else if (opt.suite == "steeples") {
    results.push_back(verify_steeples(10));
  } else {
    throw std::invalid_argument(
        "unknown suite '" + opt.suite +
        "' (reduction-law, counts, mod9, palindrome, oracle-equivalence, "
        "completeness, steeples, all)");
  }
  bool all_pass = true;
  for (const SuiteResult& result : results) {
    std::cout << format_result(result) << "\n";
    all_pass = all_pass && result.pass;
  }
  return all_pass ? kOk : kVerifyFailure;
}

int run_render(const Options& opt) {
  bool svg = false;
  if (opt.format == "svg") {
    svg = true;
  } else if (opt.format != "text") {
    throw std::invalid_argument("unknown render format '" + opt.format +
                                "' (svg, text)");
  }
  std::string body;
  if (opt.what == "crossdiff") {
    StepPlot plot = step_plot(unit_crossdiff_row(opt.n));
    body = svg ? to_svg(plot) : to_text(plot);
  } else if (opt.what == "noreduction") {
    StepPlot plot = step_plot(no_reduction_row(opt.n));
    body = svg ? to_svg(plot) : to_text(plot);
  } else if (opt.what == "cantor") {
    IntervalBitmap bitmap = cantor_bitmap(opt.n);
    body = svg ? to_svg(bitmap) : to_text(bitmap);
  } else if (opt.what == "ones") {
    IntervalBitmap bitmap = ones_bitmap(opt.n);
    body = svg ? to_svg(bitmap) : to_text(bitmap);
  } else if (opt.what == "steeples") {
    body = svg ? to_svg_steeples(opt.n) : to_text_steeples(opt.n);
  } else {
    throw std::invalid_argument(
        "unknown render subject '" + opt.what +
        "' (crossdiff, noreduction, cantor, ones, steeples)");
  }
  Output out(opt.output);
  if (!out.ok()) {
    std::cerr << "error: cannot open '" << opt.output << "'\n";
    return kIoFailure;
  }
  out.stream() << body;
  return out.flush() ? kOk : kIoFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{
      "weighted-mediant Stern-Brocot rows, cross-differences and renders"};
  app.require_subcommand(1);

  CLI::App* row = app.add_subcommand("row", "generate one row of fractions");
  row->add_option("--n", opt.n, "row index")->required();
  row->add_option("--k", opt.k, "mediant weight (default 3)");
  row->add_option("--start", opt.start, "start pair (default 0/1,1/1)");
  row->add_flag("--no-reduce", opt.no_reduce, "keep mediants unreduced");
  row->add_option("--format", opt.format, "text, json or csv");
  row->add_option("--row-cap", opt.row_cap, "generation cap override");
  row->add_option("--output", opt.output, "output file, - for stdout");

  CLI::App* crossdiff = app.add_subcommand(
      "crossdiff", "cross-differences of adjacent fractions in one row");
  crossdiff->add_option("--n", opt.n, "row index")->required();
  crossdiff->add_option("--k", opt.k, "mediant weight (default 3)");
  crossdiff->add_option("--start", opt.start, "start pair (default 0/1,1/1)");
  crossdiff->add_flag("--no-reduce", opt.no_reduce, "keep mediants unreduced");
  crossdiff->add_option("--method", opt.method, "fractions, rule or oracle");
  crossdiff->add_option("--format", opt.format, "text, json, csv or log3");
  crossdiff->add_flag("--check", opt.check,
                      "compare all applicable constructions and report");
  crossdiff->add_flag("--probe-rule", opt.probe_rule,
                      "empirically compare the propagation rule against "
                      "fractions row by row; reports, never fails");
  crossdiff->add_option("--row-cap", opt.row_cap, "generation cap override");
  crossdiff->add_option("--output", opt.output, "output file, - for stdout");

  CLI::App* query = app.add_subcommand(
      "query", "value of one gap of the unit tree by ternary index");
  query->add_option("--index", opt.index, "gap index, decimal")->required();
  unsigned query_row = 0;
  CLI::Option* query_row_opt =
      query->add_option("--row", query_row, "row width (default: the limit row)");
  query->add_flag("--no-reduce", opt.no_reduce, "query the no-reduction tree");

  CLI::App* verify =
      app.add_subcommand("verify", "run the exhaustive desk-scale suites");
  verify->add_option("--suite", opt.suite,
                     "suite name or all (default all)");

  CLI::App* render = app.add_subcommand("render", "step plots and bitmaps");
  render->add_option("--what", opt.what,
                     "crossdiff, noreduction, cantor, ones or steeples")
      ->required();
  render->add_option("--n", opt.n, "row index / iteration depth")->required();
  render->add_option("--format", opt.format, "svg or text (default svg)");
  render->add_option("--output", opt.output, "output file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  try {
    if (row->parsed()) return run_row(opt);
    if (crossdiff->parsed()) return run_crossdiff(opt);
    if (query->parsed()) {
      if (query_row_opt->count() > 0) opt.row = query_row;
      return run_query(opt);
    }
    if (verify->parsed()) return run_verify(opt);
    if (render->parsed()) {
      // Renders default to SVG; the shared Options default of "text" only
      // applies when the flag was actually given.
      if (render->get_option("--format")->count() == 0) opt.format = "svg";
      return run_render(opt);
    }
  } catch (const RowLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadArgs;
  }
  return kBadArgs;
}
