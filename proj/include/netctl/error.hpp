#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace netctl {

enum class ErrorCode {
  OutOfRangeNode,
  SelfLoop,
  MissingWeight,
  Disconnected,
  NonpositiveWmin,
  NonpositiveRange,
  KTooSmall,
  IndexMismatch,
  BudgetExceeded,
  EmptyClique,
  InfeasibleTarget,
  InfeasibleNDCombination,
  DiameterTooSmall,
  UnstableStep,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code; the CLI maps codes to exit status.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace netctl
