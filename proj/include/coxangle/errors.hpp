#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxangle {

enum class ErrorCode {
  DuplicateLabel,
  InvalidEntry,
  NotSpherical,
  UnknownType,
  RankOutOfRange,
  UnknownNode,
  NotAnAutomorphism,
  NonCrystallographic,
  DimensionMismatch,
  OrbitBudgetExceeded,
  KernelRange,
  InvalidTitsDiagram,
  NontrivialGamma,
  ZeroRelativeRank,
  ParseError,
  ValidationError,
};

/// Stable machine-readable name, e.g. "NotSpherical".
std::string_view code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coxangle
