#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace halg {

/// Base of all library errors. The code is a stable machine-readable tag;
/// the CLI maps codes onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define HALG_DEFINE_ERROR(Name)                                    \
  struct Name : Error {                                            \
    explicit Name(const std::string& w) : Error(#Name, w) {}       \
  }

// Input / shape errors.
HALG_DEFINE_ERROR(DimensionMismatch);
HALG_DEFINE_ERROR(FieldMismatch);
HALG_DEFINE_ERROR(DivisionByZero);
HALG_DEFINE_ERROR(ParseError);
HALG_DEFINE_ERROR(InvalidGroupTable);
HALG_DEFINE_ERROR(CharacteristicDividesOrder);
HALG_DEFINE_ERROR(NotInjective);

// Precondition violations of the algebraic constructors.
HALG_DEFINE_ERROR(NotABialgebra);
HALG_DEFINE_ERROR(NotModuleCoalgebra);
HALG_DEFINE_ERROR(NotComoduleCoalgebra);
HALG_DEFINE_ERROR(NotPartialAction);
HALG_DEFINE_ERROR(NotPartialCoaction);
HALG_DEFINE_ERROR(NotPartialModuleCoalgebra);
HALG_DEFINE_ERROR(NotPartialComoduleCoalgebra);
HALG_DEFINE_ERROR(NotAProjection);
HALG_DEFINE_ERROR(NotComultiplicative);
HALG_DEFINE_ERROR(ProjectionConditionFailed);
HALG_DEFINE_ERROR(CoactionProjectionConditionFailed);
HALG_DEFINE_ERROR(ConditionsViolated);
HALG_DEFINE_ERROR(NotStandardForm);

// A theorem-guaranteed construction failed its own verifier.
HALG_DEFINE_ERROR(InternalInvariant);

#undef HALG_DEFINE_ERROR

}  // namespace halg
