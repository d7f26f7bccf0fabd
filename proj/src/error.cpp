#include "netctl/error.hpp"

namespace netctl {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::OutOfRangeNode: return "OutOfRangeNode";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::MissingWeight: return "MissingWeight";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonpositiveWmin: return "NonpositiveWmin";
    case ErrorCode::NonpositiveRange: return "NonpositiveRange";
    case ErrorCode::KTooSmall: return "KTooSmall";
    case ErrorCode::IndexMismatch: return "IndexMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyClique: return "EmptyClique";
    case ErrorCode::InfeasibleTarget: return "InfeasibleTarget";
    case ErrorCode::InfeasibleNDCombination: return "InfeasibleNDCombination";
    case ErrorCode::DiameterTooSmall: return "DiameterTooSmall";
    case ErrorCode::UnstableStep: return "UnstableStep";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace netctl
