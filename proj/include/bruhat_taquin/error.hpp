#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bruhat_taquin {

enum class ErrorCode {
  InvalidPermutation,
  SizeMismatch,
  InvalidTransposition,
  NotGrassmannian,
  InvalidPartition,
  InvalidBox,
  ShapeMismatch,
  BoundaryMismatch,
  InvalidChain,
  PreconditionViolated,
  NoChainFound,
  InvalidWindow,
  NoCanonical,
  MultipleCanonical,
  PrefixShapeAnomaly,
  NestingPresent,
  InvalidCell,
  NoCaseMatches,
  MultipleCasesMatch,
  NoValidChoice,
  RuleDisagreement,
  PropertyViolation,
  NegativeCoefficient,
  ArithmeticOverflow,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::InvalidTransposition: return "InvalidTransposition";
    case ErrorCode::NotGrassmannian: return "NotGrassmannian";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::InvalidBox: return "InvalidBox";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorCode::InvalidChain: return "InvalidChain";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NoChainFound: return "NoChainFound";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::NoCanonical: return "NoCanonical";
    case ErrorCode::MultipleCanonical: return "MultipleCanonical";
    case ErrorCode::PrefixShapeAnomaly: return "PrefixShapeAnomaly";
    case ErrorCode::NestingPresent: return "NestingPresent";
    case ErrorCode::InvalidCell: return "InvalidCell";
    case ErrorCode::NoCaseMatches: return "NoCaseMatches";
    case ErrorCode::MultipleCasesMatch: return "MultipleCasesMatch";
    case ErrorCode::NoValidChoice: return "NoValidChoice";
    case ErrorCode::RuleDisagreement: return "RuleDisagreement";
    case ErrorCode::PropertyViolation: return "PropertyViolation";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bruhat_taquin
