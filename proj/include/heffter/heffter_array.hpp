#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heffter/cyclotomy.hpp"
#include "heffter/field.hpp"

namespace heffter {

/// Dense row-major matrix of field element codes.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Element> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Matrix(std::size_t r, std::size_t c, std::vector<Element> values);

  Element operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::span<const Element> row(std::size_t i) const {
    return std::span<const Element>(data).subspan(i * cols, cols);
  }
  std::vector<Element> column(std::size_t j) const;
  Matrix transposed() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

/// An m x n candidate array over F_q with q = 2mn + 1 and m, n >= 3.
/// Entries are not required to be a half-set; verify_heffter reports that.
class HeffterArray {
 public:
  /// Throws InvalidArgument (m or n < 3, entry outside the field) or
  /// DimensionMismatch (q != 2mn + 1).
  HeffterArray(FieldPtr field, Matrix entries);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t m() const noexcept { return entries_.rows; }
  std::size_t n() const noexcept { return entries_.cols; }
  const Matrix& entries() const noexcept { return entries_; }
  Element at(std::size_t i, std::size_t j) const { return entries_(i, j); }

  HeffterArray scaled(Element u) const;
  HeffterArray transposed() const;

  friend bool operator==(const HeffterArray& a, const HeffterArray& b);

 private:
  FieldPtr field_;
  Matrix entries_;
};

/// [x_i * y_j]; throws like the HeffterArray constructor.
HeffterArray rank_one_array(const FieldPtr& field, std::span<const Element> x,
                            std::span<const Element> y);

Matrix scale(const Field& field, const Matrix& a, Element u);

struct Failure {
  std::string check;     // "half-set", "row-sum", "column-sum", "rank-one", "globally-simple"
  std::string location;  // 1-based, e.g. "row 2", "entry (1,3)", "entries (1,1),(2,3)"

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
  bool half_set = false;
  bool rows_zero_sum = false;
  bool cols_zero_sum = false;
  bool rank_one = false;
  bool globally_simple = false;
  std::vector<Failure> failures;

  /// The three Heffter axioms.
  bool is_heffter() const noexcept { return half_set && rows_zero_sum && cols_zero_sum; }
};

VerificationReport verify_heffter(const HeffterArray& a);

/// a_{ij} = x_i y_j with x_1 = 1, so y is row 1 verbatim.
struct RankOneFactors {
  std::vector<Element> x;
  std::vector<Element> y;
};

/// Factors when every row is a multiple of row 1 and no entry is zero.
std::optional<RankOneFactors> rank_one_factors(const HeffterArray& a);

/// True iff b_{ij} = a_{pi(i), psi(j)} for some row permutation pi and
/// column permutation psi. Different shapes compare false.
bool perm_equivalent(const Matrix& a, const Matrix& b);

struct MultiplierGroup {
  ElementSet elements;
  std::optional<ElementSet> s_part;  // stabilizer of the X factor
  std::optional<ElementSet> t_part;  // stabilizer of the Y factor
};

/// Tries every unit u: u is a multiplier iff uA, or uA^T when m == n, is a
/// row/column permutation of A.
MultiplierGroup multiplier_group_brute(const HeffterArray& a);

/// S * T from the factor stabilizers; throws NotRankOne.
MultiplierGroup multiplier_group_rank_one(const HeffterArray& a);

std::vector<Element> partial_sums(const Field& field, std::span<const Element> line);

enum class SimplicityMode { Full, Fast };

/// Full checks every row and column; Fast checks row 1 and column 1 only and
/// throws NotRankOne unless the array is rank-one.
bool is_globally_simple(const HeffterArray& a, SimplicityMode mode);

/// Over a common prime field: some unit u makes uA or uA^T a row/column
/// permutation of B. Extension fields throw UnsupportedField.
bool is_isomorphic_prime(const HeffterArray& a, const HeffterArray& b);

}  // namespace heffter
