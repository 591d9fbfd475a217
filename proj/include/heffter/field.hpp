#pragma once

// Exact arithmetic in F_{p^k}.
//
// An element is stored as the integer code sum_t c_t * p^t of its coefficient
// vector (c_0 first) over the root g of the field's monic primitive modulus.
// For k == 1 the code is simply the residue. The field owns full exp/log
// tables for its canonical primitive element r plus a Zech logarithm table,
// so every operation is a handful of table lookups.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "heffter/number_theory.hpp"

namespace heffter {

/// Integer code of a field element; meaningful only together with its Field.
struct Element {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Builds F_{p^k}. Without a modulus (k > 1) the canonical primitive
/// polynomial is chosen: the primitive monic polynomial of degree k with the
/// smallest code sum_t c_t p^t. For k == 1 the primitive element is the
/// smallest positive primitive root mod p; for k > 1 it is the root g.
///
/// Throws InvalidArgument (p not prime, k == 0, field too large, modulus
/// malformed) or InvalidModulus (modulus reducible or not primitive).
FieldPtr make_field(std::uint64_t p, std::uint32_t k,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

class Field {
 public:
  /// Largest supported order; tables are O(q).
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 26;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Order of the multiplicative group, q - 1.
  std::uint32_t units() const noexcept { return q_ - 1; }

  /// k+1 coefficients, constant first; empty when k == 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return Element{0}; }
  Element one() const noexcept { return Element{1}; }
  Element primitive() const noexcept { return Element{exp_[units() > 1 ? 1 : 0]}; }
  Element minus_one() const noexcept { return neg(one()); }

  bool contains(Element a) const noexcept { return a.code < q_; }

  /// Reduces an integer into the prime subfield.
  Element from_int(std::int64_t v) const noexcept;
  /// Exactly k coefficients, each reduced mod p; throws InvalidArgument on a
  /// wrong length.
  Element from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Element a) const;

  Element add(Element a, Element b) const noexcept;
  Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
  Element neg(Element a) const noexcept;
  Element mul(Element a, Element b) const noexcept;
  /// Throws DivisionByZero on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  /// Negative exponents allowed for nonzero a.
  Element pow(Element a, std::int64_t e) const;

  /// Coefficient-wise addition, independent of the Zech table.
  Element add_coefficientwise(Element a, Element b) const noexcept;

  /// Discrete log base r in [0, q-2]; throws InvalidArgument on zero.
  std::uint32_t log(Element a) const;
  /// Unchecked variant: kNoLog for zero.
  std::uint32_t log_or_none(Element a) const noexcept { return log_[a.code]; }
  /// r^t for any t (reduced mod q-1).
  Element exp(std::uint64_t t) const noexcept { return Element{exp_[t % units()]}; }

  /// Log of -1, i.e. (q-1)/2 for odd q and 0 in characteristic 2.
  std::uint32_t log_minus_one() const noexcept { return p_ == 2 ? 0 : units() / 2; }

  const std::vector<std::uint32_t>& exp_table() const noexcept { return exp_; }
  const std::vector<std::uint32_t>& log_table() const noexcept { return log_; }

  /// Decimal residue for k == 1; otherwise a polynomial in g with descending
  /// powers, e.g. "3g^2+g+4", "g", "0".
  std::string to_string(Element a) const;
  /// Inverse of to_string. For k == 1 a leading '-' is accepted and reduced.
  /// Throws ParseError.
  Element parse(std::string_view text) const;

  /// Same p, k and modulus.
  bool same_as(const Field& other) const noexcept;

 private:
  friend FieldPtr make_field(std::uint64_t, std::uint32_t,
                             std::optional<std::vector<std::uint32_t>>);
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  void build_tables();
  std::uint32_t times_root(std::uint32_t code) const;

  std::uint32_t p_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;   // size q-1
  std::vector<std::uint32_t> log_;   // size q, log_[0] == kNoLog
  std::vector<std::uint32_t> zech_;  // zech_[t] = log(1 + r^t) or kNoLog
};

/// Field-tagged element value for the public arithmetic API. Mixing elements
/// of different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Element value);
  static FieldElement from_coeffs(FieldPtr field, std::span<const std::int64_t> coeffs);
  static FieldElement parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const noexcept { return field_; }
  Element value() const noexcept { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const noexcept { return value_.code == 0; }
  std::string to_string() const { return field_->to_string(value_); }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Element value_;
};

/// Log of x base the field's primitive element; InvalidArgument for zero.
std::uint32_t discrete_log(const Field& f, const FieldElement& x);

}  // namespace heffter
