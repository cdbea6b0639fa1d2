#include <wmsb/row.hpp>

#include <stdexcept>
#include <string>

namespace wmsb {

void validate(const RowSpec& spec) {
  if (spec.k < 2) {
    throw std::invalid_argument("row weight must be at least 2, got " +
                                std::to_string(spec.k));
  }
  if (!value_less(spec.start_left, spec.start_right)) {
    throw std::invalid_argument("row start pair must be strictly increasing: " +
                                to_string(spec.start_left) + " vs " +
                                to_string(spec.start_right));
  }
}

Integer row_size(const RowSpec& spec) {
  validate(spec);
  return ipow(spec.k, spec.n) + 1;
}

RowStream::RowStream(RowSpec spec, unsigned row_cap) : spec_(std::move(spec)) {
  validate(spec_);
  if (spec_.n > row_cap) {
    throw RowLimitError("row " + std::to_string(spec_.n) +
                        " exceeds the generation cap " +
                        std::to_string(row_cap));
  }
  stack_.push_back({spec_.start_left, spec_.start_right, spec_.n});
}

std::optional<Fraction> RowStream::next() {
  if (!start_emitted_) {
    start_emitted_ = true;
    return spec_.start_left;
  }
  while (!stack_.empty()) {
    Gap gap = std::move(stack_.back());
    stack_.pop_back();
    if (gap.depth == 0) return std::move(gap.right);
    std::vector<Mediant> ms =
        weighted_mediants(spec_.k, gap.left, gap.right, spec_.reduce);
    // Push the k subgaps right to left so the leftmost is expanded first.
    // Each mediant serves as the right bound of one subgap and the left
    // bound of the next; the left-bound use copies, the right-bound moves.
    unsigned d = gap.depth - 1;
    stack_.push_back({ms.back().fraction, std::move(gap.right), d});
    for (std::size_t j = ms.size() - 1; j >= 1; --j) {
      stack_.push_back({ms[j - 1].fraction, std::move(ms[j].fraction), d});
    }
    stack_.push_back({std::move(gap.left), std::move(ms[0].fraction), d});
  }
  return std::nullopt;
}

std::vector<Fraction> materialize_row(const RowSpec& spec, unsigned row_cap) {
  std::vector<Fraction> row;
  Integer size = row_size(spec);
  if (size <= 1 << 26) row.reserve(static_cast<std::size_t>(size));
  RowStream stream(spec, row_cap);
  while (std::optional<Fraction> f = stream.next()) {
    row.push_back(std::move(*f));
  }
  return row;
}

std::optional<RowPosition> find_fraction(const Fraction& target, unsigned max_n) {
  Fraction left{0, 1};
  Fraction right{1, 1};
  if (value_equal(target, left)) return RowPosition{0, 0};
  if (value_equal(target, right)) return RowPosition{0, 1};
  if (value_less(target, left) || value_less(right, target)) return std::nullopt;
  Integer left_index{0};
  for (unsigned row = 1; row <= max_n; ++row) {
    std::vector<Mediant> ms = weighted_mediants(3, left, right, true);
    // Row indices triple per descent: the gap's left endpoint moves from
    // index i in row r to index 3i + j in row r + 1.
    left_index *= 3;
    if (value_equal(target, ms[0].fraction)) {
      return RowPosition{row, left_index + 1};
    }
    if (value_equal(target, ms[1].fraction)) {
      return RowPosition{row, left_index + 2};
    }
    if (value_less(target, ms[0].fraction)) {
      right = std::move(ms[0].fraction);
    } else if (value_less(target, ms[1].fraction)) {
      left = std::move(ms[0].fraction);
      right = std::move(ms[1].fraction);
      left_index += 1;
    } else {
      left = std::move(ms[1].fraction);
      left_index += 2;
    }
  }
  return std::nullopt;
}

std::optional<RowPosition> find_fraction_by_scan(const Fraction& target,
                                                 unsigned max_n,
                                                 unsigned row_cap) {
  for (unsigned row = 0; row <= max_n; ++row) {
    RowStream stream(unit_row_spec(row), row_cap);
    Integer index{0};
    while (std::optional<Fraction> f = stream.next()) {
      if (value_equal(*f, target)) return RowPosition{row, index};
      ++index;
    }
  }
  return std::nullopt;
}

}  // namespace wmsb
