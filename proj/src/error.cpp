#include "moorekit/error.hpp"

namespace moorekit {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPrimeP: return "NonPrimeP";
    case ErrorCode::DegreeCapExceeded: return "DegreeCapExceeded";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::EmptyTuple: return "EmptyTuple";
    case ErrorCode::TupleTooShort: return "TupleTooShort";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::ZeroFunctional: return "ZeroFunctional";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::NotFullDegree: return "NotFullDegree";
    case ErrorCode::NotRightDivisible: return "NotRightDivisible";
    case ErrorCode::KernelNotRational: return "KernelNotRational";
    case ErrorCode::NotAPole: return "NotAPole";
    case ErrorCode::NotSimplePole: return "NotSimplePole";
    case ErrorCode::FactorizationMismatch: return "FactorizationMismatch";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::ValueNotInFq: return "ValueNotInFq";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::VarMismatch: return "VarMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::DependentInput: return "DependentInput";
    case ErrorCode::InternalMismatch: return "InternalMismatch";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::NotInZ: return "NotInZ";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PreconditionError: return "PreconditionError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

bool is_internal_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::KernelNotRational:
    case ErrorCode::FactorizationMismatch:
    case ErrorCode::ValueNotInFq:
    case ErrorCode::InternalMismatch:
    case ErrorCode::VerificationFailed:
      return true;
    default:
      return false;
  }
}

}  // namespace moorekit
