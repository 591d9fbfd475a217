#include "heffter/error.hpp"

namespace heffter {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::FieldMismatch: return "field-mismatch";
    case ErrorKind::InvalidIndex: return "invalid-index";
    case ErrorKind::InvalidOrder: return "invalid-order";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::NotRankOne: return "not-rank-one";
    case ErrorKind::UnsupportedField: return "unsupported-field";
    case ErrorKind::NotAdmissible: return "not-admissible";
    case ErrorKind::NotPerfectEligible: return "not-perfect-eligible";
    case ErrorKind::NotAgreeable: return "not-agreeable";
    case ErrorKind::InvalidParams: return "invalid-params";
    case ErrorKind::ParseError: return "parse-error";
    case ErrorKind::SchemaError: return "schema-error";
  }
  return "unknown";
}

}  // namespace heffter
