#pragma once

#include <stdexcept>
#include <string>

namespace emp {

enum class ErrorCode {
  ZeroVector,
  ZeroColumn,
  RankDeficient,
  DimensionMismatch,
  BadDimension,
  BadParameter,
  NonFinite,
  NegativeWeight,
  DegenerateHistory,
  NonPositiveGamma,
  Config,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Single exception type for the library. `code()` identifies the failure;
/// `index()` carries the offending column for ZeroColumn and is -1 otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long index = -1)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  long index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  long index_;
};

inline const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroColumn: return "ZeroColumn";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DegenerateHistory: return "DegenerateHistory";
    case ErrorCode::NonPositiveGamma: return "NonPositiveGamma";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace emp
