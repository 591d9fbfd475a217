#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heffter {

enum class ErrorKind {
  InvalidArgument,
  InvalidModulus,
  DivisionByZero,
  FieldMismatch,
  InvalidIndex,
  InvalidOrder,
  DimensionMismatch,
  NotRankOne,
  UnsupportedField,
  NotAdmissible,
  NotPerfectEligible,
  NotAgreeable,
  InvalidParams,
  ParseError,
  SchemaError,
};

/// Stable kebab-case name, e.g. "not-admissible".
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace heffter
