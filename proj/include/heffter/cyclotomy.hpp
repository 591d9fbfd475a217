#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heffter/field.hpp"

namespace heffter {

/// A set of nonzero elements of one field, kept sorted by discrete log.
class ElementSet {
 public:
  explicit ElementSet(FieldPtr field);

  /// Duplicates collapse; zero throws InvalidArgument.
  static ElementSet from_elements(FieldPtr field, std::span<const Element> elements);
  static ElementSet from_logs(FieldPtr field, std::vector<std::uint32_t> logs);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return logs_.size(); }
  bool empty() const noexcept { return logs_.empty(); }

  /// Ascending discrete logs.
  std::span<const std::uint32_t> logs() const noexcept { return logs_; }
  /// Elements in log order.
  std::vector<Element> elements() const;
  bool contains(Element a) const;

  /// u * S for a nonzero u.
  ElementSet scaled(Element u) const;
  /// -S.
  ElementSet negated() const;

  /// Comma-separated element strings in log order.
  std::string to_string() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b);

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> logs_;
};

/// Index e (a divisor of q-1) and class index i; i is taken mod e.
struct CosetSpec {
  std::uint32_t e = 1;
  std::uint64_t i = 0;
};

/// C^e_i = r^i <r^e>, of size (q-1)/e. InvalidIndex unless e | q-1.
ElementSet cyclotomic_class(const FieldPtr& field, CosetSpec spec);

/// The subgroup of order d, i.e. C^{(q-1)/d}. InvalidOrder unless d | q-1.
ElementSet subgroup_of_order(const FieldPtr& field, std::uint32_t d);

bool is_zero_sum(const ElementSet& s);

/// |s| == (q-1)/2 and s contains exactly one of x, -x for every x != 0.
bool is_half_set(const ElementSet& s);

/// {u : u s = s}. InvalidArgument on an empty set.
ElementSet stabilizer(const ElementSet& s);

/// The product set x*y when all |x||y| products are distinct, else nullopt.
/// FieldMismatch for sets over different fields, InvalidArgument if empty.
std::optional<ElementSet> product_factorization(const ElementSet& x, const ElementSet& y);

/// {a*b} without the distinctness requirement.
ElementSet product_set(const ElementSet& x, const ElementSet& y);

/// True iff s is a union of cosets of the subgroup of order d (d | q-1).
bool is_union_of_cosets(const ElementSet& s, std::uint32_t d);

}  // namespace heffter
