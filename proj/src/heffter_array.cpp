#include "heffter/heffter_array.hpp"

#include <algorithm>

#include "heffter/error.hpp"

namespace heffter {

Matrix::Matrix(std::size_t r, std::size_t c, std::vector<Element> values)
    : rows(r), cols(c), data(std::move(values)) {
  if (data.size() != r * c) throw Error(ErrorKind::InvalidArgument, "Matrix: size mismatch");
}

std::vector<Element> Matrix::column(std::size_t j) const {
  std::vector<Element> out(rows);
  for (std::size_t i = 0; i < rows; ++i) out[i] = (*this)(i, j);
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

HeffterArray::HeffterArray(FieldPtr field, Matrix entries)
    : field_(std::move(field)), entries_(std::move(entries)) {
  if (!field_) throw Error(ErrorKind::InvalidArgument, "HeffterArray: null field");
  if (entries_.rows < 3 || entries_.cols < 3) {
    throw Error(ErrorKind::InvalidArgument, "HeffterArray: m and n must both be at least 3");
  }
  if (std::uint64_t{field_->q()} != 2 * std::uint64_t{entries_.rows} * entries_.cols + 1) {
    throw Error(ErrorKind::DimensionMismatch,
                "HeffterArray: field order " + std::to_string(field_->q()) + " != 2*" +
                    std::to_string(entries_.rows) + "*" + std::to_string(entries_.cols) + "+1");
  }
  for (Element e : entries_.data) {
    if (!field_->contains(e)) {
      throw Error(ErrorKind::InvalidArgument, "HeffterArray: entry outside the field");
    }
  }
}

HeffterArray HeffterArray::scaled(Element u) const {
  return HeffterArray(field_, scale(*field_, entries_, u));
}

HeffterArray HeffterArray::transposed() const {
  return HeffterArray(field_, entries_.transposed());
}

bool operator==(const HeffterArray& a, const HeffterArray& b) {
  return a.field_->same_as(*b.field_) && a.entries_ == b.entries_;
}

Matrix scale(const Field& field, const Matrix& a, Element u) {
  Matrix out(a.rows, a.cols);
  for (std::size_t t = 0; t < a.data.size(); ++t) out.data[t] = field.mul(u, a.data[t]);
  return out;
}

HeffterArray rank_one_array(const FieldPtr& field, std::span<const Element> x,
                            std::span<const Element> y) {
  Matrix entries(x.size(), y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) entries(i, j) = field->mul(x[i], y[j]);
  }
  return HeffterArray(field, std::move(entries));
}

std::vector<Element> partial_sums(const Field& field, std::span<const Element> line) {
  std::vector<Element> out;
  out.reserve(line.size());
  Element acc = field.zero();
  for (Element e : line) {
    acc = field.add(acc, e);
    out.push_back(acc);
  }
  return out;
}

namespace {

std::string entry_name(std::size_t flat, std::size_t cols) {
  return "(" + std::to_string(flat / cols + 1) + "," + std::to_string(flat % cols + 1) + ")";
}

bool distinct_partial_sums(const Field& field, std::span<const Element> line) {
  auto sums = partial_sums(field, line);
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

Element line_sum(const Field& field, std::span<const Element> line) {
  Element acc = field.zero();
  for (Element e : line) acc = field.add(acc, e);
  return acc;
}

// First row (then column) whose partial sums repeat, or nullopt.
std::optional<Failure> simplicity_failure(const HeffterArray& a, std::size_t max_rows,
                                          std::size_t max_cols) {
  const Field& f = *a.field();
  for (std::size_t i = 0; i < max_rows; ++i) {
    if (!distinct_partial_sums(f, a.entries().row(i))) {
      return Failure{"globally-simple", "row " + std::to_string(i + 1)};
    }
  }
  for (std::size_t j = 0; j < max_cols; ++j) {
    if (!distinct_partial_sums(f, a.entries().column(j))) {
      return Failure{"globally-simple", "column " + std::to_string(j + 1)};
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_heffter(const HeffterArray& a) {
  const Field& f = *a.field();
  const Matrix& e = a.entries();
  VerificationReport report;

  // Half-set: nonzero, pairwise distinct, never both x and -x.
  report.half_set = true;
  {
    std::vector<std::int64_t> where(f.q(), -1);
    for (std::size_t t = 0; t < e.data.size() && report.half_set; ++t) {
      const Element v = e.data[t];
      if (v == f.zero()) {
        report.half_set = false;
        report.failures.push_back({"half-set", "entry " + entry_name(t, e.cols) + " is zero"});
      } else if (where[v.code] >= 0) {
        report.half_set = false;
        report.failures.push_back(
            {"half-set", "entries " + entry_name(static_cast<std::size_t>(where[v.code]), e.cols) +
                             "," + entry_name(t, e.cols) + " are equal"});
      } else if (where[f.neg(v).code] >= 0) {
        report.half_set = false;
        report.failures.push_back(
            {"half-set", "entries " +
                             entry_name(static_cast<std::size_t>(where[f.neg(v).code]), e.cols) +
                             "," + entry_name(t, e.cols) + " are opposite"});
      }
      where[v.code] = static_cast<std::int64_t>(t);
    }
  }

  report.rows_zero_sum = true;
  for (std::size_t i = 0; i < e.rows; ++i) {
    if (line_sum(f, e.row(i)) != f.zero()) {
      report.rows_zero_sum = false;
      report.failures.push_back({"row-sum", "row " + std::to_string(i + 1)});
      break;
    }
  }
  report.cols_zero_sum = true;
  for (std::size_t j = 0; j < e.cols; ++j) {
    if (line_sum(f, e.column(j)) != f.zero()) {
      report.cols_zero_sum = false;
      report.failures.push_back({"column-sum", "column " + std::to_string(j + 1)});
      break;
    }
  }

  report.rank_one = rank_one_factors(a).has_value();
  if (!report.rank_one) report.failures.push_back({"rank-one", "rows not proportional to row 1"});

  auto simple = simplicity_failure(a, e.rows, e.cols);
  report.globally_simple = !simple.has_value();
  if (simple) report.failures.push_back(*simple);
  return report;
}

std::optional<RankOneFactors> rank_one_factors(const HeffterArray& a) {
  const Field& f = *a.field();
  const Matrix& e = a.entries();
  if (std::any_of(e.data.begin(), e.data.end(), [&](Element v) { return v == f.zero(); })) {
    return std::nullopt;
  }
  RankOneFactors factors;
  factors.y.assign(e.row(0).begin(), e.row(0).end());
  const Element head_inv = f.inv(e(0, 0));
  for (std::size_t i = 0; i < e.rows; ++i) {
    const Element xi = f.mul(e(i, 0), head_inv);
    for (std::size_t j = 0; j < e.cols; ++j) {
      if (f.mul(xi, factors.y[j]) != e(i, j)) return std::nullopt;
    }
    factors.x.push_back(xi);
  }
  return factors;
}

bool is_globally_simple(const HeffterArray& a, SimplicityMode mode) {
  if (mode == SimplicityMode::Full) {
    return !simplicity_failure(a, a.m(), a.n()).has_value();
  }
  if (!rank_one_factors(a)) {
    throw Error(ErrorKind::NotRankOne, "fast global-simplicity check needs a rank-one array");
  }
  // Row i is a scalar multiple of row 1, so its partial sums are too.
  return !simplicity_failure(a, 1, 1).has_value();
}

}  // namespace heffter
