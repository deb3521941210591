#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace memrw {

enum class ErrorCode {
  InvalidDimension,
  InvalidProbability,
  InvalidRegimeForFamily,
  InvalidConfig,
  DimensionMismatch,
  SteppedAfterDone,
  InvalidAction,
  InferenceAmbiguous,
  AgentEnvMismatch,
  FamilyMismatch,
  UnknownAgent,
  MalformedReport,
};

std::string_view to_string(ErrorCode code);

/// Base exception for all engine errors. The code is stable and is what tests
/// and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace memrw
