#pragma once

#include <stdexcept>
#include <string>

namespace fanres {

enum class ErrorKind {
  InvalidInput,
  NonPrimitive,
  ZeroVector,
  DegenerateCone,
  NotStronglyConvex,
  DimensionMismatch,
  OutsideSupport,
  NonPositiveInput,
  AdjacentPair,
  UnsupportedSupport,
  UnsupportedFormat,
  StageMismatch,
  ZeroPolynomial,
  NonMonicDivisor,
  BudgetExceeded,
  Overflow,
  Internal,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NonPrimitive: return "NonPrimitive";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DegenerateCone: return "DegenerateCone";
    case ErrorKind::NotStronglyConvex: return "NotStronglyConvex";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::OutsideSupport: return "OutsideSupport";
    case ErrorKind::NonPositiveInput: return "NonPositiveInput";
    case ErrorKind::AdjacentPair: return "AdjacentPair";
    case ErrorKind::UnsupportedSupport: return "UnsupportedSupport";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::StageMismatch: return "StageMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonMonicDivisor: return "NonMonicDivisor";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Process exit code for an error escaping a CLI command.
inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::Overflow:
    case ErrorKind::Internal:
      return 3;
    default:
      return 2;
  }
}

}  // namespace fanres
