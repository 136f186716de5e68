#pragma once

#include <stdexcept>
#include <string>

namespace tihecke {

// Failure categories. Every throwing operation documents which of these it
// can raise; tests match on the code, not the message text.
enum class errc {
  invalid_spec,
  unsupported_matrix,
  group_too_large,
  truncated_table,
  not_divisible,
  division_by_zero,
  forbidden_specialization,
  not_invertible,
  mixed_fields,
  positive_exponent_present,
  not_twisted_involution,
  not_reduced_expression,
  not_polynomial,
  pi_not_unique,
  denominator_outside_A_minus1,
  determinant_not_unit,
  bad_io,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_spec: return "InvalidSpec";
    case errc::unsupported_matrix: return "UnsupportedMatrix";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::truncated_table: return "TruncatedTable";
    case errc::not_divisible: return "NotDivisible";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::forbidden_specialization: return "ForbiddenSpecialization";
    case errc::not_invertible: return "NotInvertible";
    case errc::mixed_fields: return "MixedFields";
    case errc::positive_exponent_present: return "PositiveExponentPresent";
    case errc::not_twisted_involution: return "NotTwistedInvolution";
    case errc::not_reduced_expression: return "NotReducedExpression";
    case errc::not_polynomial: return "NotPolynomial";
    case errc::pi_not_unique: return "PiNotUnique";
    case errc::denominator_outside_A_minus1: return "DenominatorOutsideAminus1";
    case errc::determinant_not_unit: return "DeterminantNotUnit";
    case errc::bad_io: return "BadIO";
    case errc::internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace tihecke
