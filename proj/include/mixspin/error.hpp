#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mixspin {

enum class ErrorCode {
  SpinOutOfRange,
  BranchingOutOfRange,
  PhiOutOfRange,
  NonPositiveTemperature,
  InvalidState,
  NumericOverflow,
  NoBracketFound,
  RootNotBracketed,
  NegativeSpectralProduct,
  NotStochastic,
  ShapeMismatch,
  SingularChain,
  EigenFailure,
  NotStationary,
  DomainError,
  ReciprocityViolated,
  ThresholdOrderViolated,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SpinOutOfRange: return "SpinOutOfRange";
    case ErrorCode::BranchingOutOfRange: return "BranchingOutOfRange";
    case ErrorCode::PhiOutOfRange: return "PhiOutOfRange";
    case ErrorCode::NonPositiveTemperature: return "NonPositiveTemperature";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NumericOverflow: return "NumericOverflow";
    case ErrorCode::NoBracketFound: return "NoBracketFound";
    case ErrorCode::RootNotBracketed: return "RootNotBracketed";
    case ErrorCode::NegativeSpectralProduct: return "NegativeSpectralProduct";
    case ErrorCode::NotStochastic: return "NotStochastic";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::SingularChain: return "SingularChain";
    case ErrorCode::EigenFailure: return "EigenFailure";
    case ErrorCode::NotStationary: return "NotStationary";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ReciprocityViolated: return "ReciprocityViolated";
    case ErrorCode::ThresholdOrderViolated: return "ThresholdOrderViolated";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mixspin
