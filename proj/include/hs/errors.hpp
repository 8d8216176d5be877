#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace hs {

/// Coarse outcome class of a failure; the CLI maps it to an exit code.
enum class ErrorKind {
  input,          // malformed or inadmissible input (exit 2)
  math_negative,  // a theorem about the input, e.g. a fixed divisor (exit 1)
  budget,         // resource limit hit (exit 3)
  internal,       // broken invariant inside the engine
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message, std::string witness = {})
      : std::runtime_error(message), kind_(kind), code_(std::move(code)), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  /// Canonical text of the offending element (a prime, a variable name, ...), may be empty.
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string code_;
  std::string witness_;
};

#define HS_DEFINE_ERROR(Name, Kind)                                                   \
  class Name : public Error {                                                         \
   public:                                                                            \
    explicit Name(const std::string& message, std::string witness = {})               \
        : Error(ErrorKind::Kind, #Name, message, std::move(witness)) {}               \
  };

HS_DEFINE_ERROR(InvalidArgument, input)
HS_DEFINE_ERROR(UnknownVariable, input)
HS_DEFINE_ERROR(CoefficientNotInRing, input)
HS_DEFINE_ERROR(ZeroPolynomial, input)
HS_DEFINE_ERROR(ConstantPolynomial, input)
HS_DEFINE_ERROR(NotPrime, input)
HS_DEFINE_ERROR(ZeroDivisor, input)
HS_DEFINE_ERROR(NotCoprimeModuli, input)
HS_DEFINE_ERROR(NotCoprimeFamily, input)
HS_DEFINE_ERROR(FewerThanTwoPolys, input)
HS_DEFINE_ERROR(ZeroPolyInFamily, input)
HS_DEFINE_ERROR(NotPrimitiveInput, input)
HS_DEFINE_ERROR(DegreeZeroInY, input)
HS_DEFINE_ERROR(AVViolation, math_negative)
HS_DEFINE_ERROR(FixedDivisorPresent, math_negative)
HS_DEFINE_ERROR(GuardUnsatisfiable, math_negative)
HS_DEFINE_ERROR(CertificateInvalid, math_negative)
HS_DEFINE_ERROR(BudgetExceeded, budget)
HS_DEFINE_ERROR(NoExponentFound, internal)
HS_DEFINE_ERROR(InternalError, internal)

#undef HS_DEFINE_ERROR

/// Parse failure with the byte offset of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorKind::input, "SyntaxError",
              "syntax error at position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hs
