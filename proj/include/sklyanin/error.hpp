#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sklyanin {

enum class ErrorCode {
  FieldMismatch,
  DuplicateSymbol,
  UnknownSymbol,
  MissingRadical,
  Zero,          // inversion of the zero element
  ZeroDivisor,   // nonzero element with singular multiplication map
  Parse,
  ConstraintViolated,
  DegenerateParameter,
  DegreeBound,
  Inhomogeneous,
  NotQuadratic,
  NotCentral,
  KernelDimZero,
  KernelDimHigh,
  NotActionClosed,
  Precondition,
  Identification,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Arithmetic failures inside the tower (as opposed to bad input).
  bool is_arithmetic() const noexcept {
    return code_ == ErrorCode::Zero || code_ == ErrorCode::ZeroDivisor ||
           code_ == ErrorCode::FieldMismatch || code_ == ErrorCode::MissingRadical;
  }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::MissingRadical: return "MissingRadical";
    case ErrorCode::Zero: return "Zero";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ConstraintViolated: return "ConstraintViolated";
    case ErrorCode::DegenerateParameter: return "DegenerateParameter";
    case ErrorCode::DegreeBound: return "DegreeBound";
    case ErrorCode::Inhomogeneous: return "Inhomogeneous";
    case ErrorCode::NotQuadratic: return "NotQuadratic";
    case ErrorCode::NotCentral: return "NotCentral";
    case ErrorCode::KernelDimZero: return "KernelDimZero";
    case ErrorCode::KernelDimHigh: return "KernelDimHigh";
    case ErrorCode::NotActionClosed: return "NotActionClosed";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::Identification: return "Identification";
  }
  return "Unknown";
}

}  // namespace sklyanin
