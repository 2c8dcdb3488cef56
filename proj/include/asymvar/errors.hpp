#pragma once

#include <stdexcept>
#include <string>

namespace asymvar {

/// Base class of every error raised by the library. `kind()` is the stable
/// machine-readable name used in reports and CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define ASYMVAR_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

// exact-arith
ASYMVAR_DEFINE_ERROR(BothDegreeZero);
ASYMVAR_DEFINE_ERROR(TowerDepthExceeded);
ASYMVAR_DEFINE_ERROR(InexactDivision);

// normal-form
ASYMVAR_DEFINE_ERROR(NormalizationFailed);

// tract-engine
ASYMVAR_DEFINE_ERROR(NotABranchPoint);
ASYMVAR_DEFINE_ERROR(InternalFractionalExponent);
ASYMVAR_DEFINE_ERROR(IterationCapExceeded);
ASYMVAR_DEFINE_ERROR(PrimitivityReductionFailed);
ASYMVAR_DEFINE_ERROR(NegativePowerResidue);
ASYMVAR_DEFINE_ERROR(MeasureViolation);

// variety-analysis
ASYMVAR_DEFINE_ERROR(ConstantParametrization);
ASYMVAR_DEFINE_ERROR(ZeroComposition);
ASYMVAR_DEFINE_ERROR(DegenerateResultant);

// cli / parser
ASYMVAR_DEFINE_ERROR(NegativeExponent);
ASYMVAR_DEFINE_ERROR(UnknownVariable);
ASYMVAR_DEFINE_ERROR(InputError);

#undef ASYMVAR_DEFINE_ERROR

/// Parse failure with the byte offset of the offending character.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("SyntaxError", message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace asymvar
