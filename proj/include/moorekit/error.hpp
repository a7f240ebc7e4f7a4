#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moorekit {

enum class ErrorCode {
  NonPrimeP,
  DegreeCapExceeded,
  DivisionByZero,
  EmptyTuple,
  TupleTooShort,
  DependentBasis,
  ZeroFunctional,
  NotReduced,
  NotFullDegree,
  NotRightDivisible,
  KernelNotRational,
  NotAPole,
  NotSimplePole,
  FactorizationMismatch,
  NotInKernel,
  ValueNotInFq,
  DecompositionFailed,
  VarMismatch,
  BudgetExceeded,
  DependentInput,
  InternalMismatch,
  VerificationFailed,
  NotInZ,
  ParseError,
  PreconditionError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every library failure is reported through this type; `code()` lets callers
// (the CLI in particular) map failures onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

// True for the codes that flag a bug inside the library rather than bad input.
bool is_internal_error(ErrorCode code) noexcept;

}  // namespace moorekit
