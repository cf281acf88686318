#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dagconvex {

enum class ErrorCode {
  CycleDetected,
  InvalidArc,
  EmptySet,
  DisconnectedInput,
  OrderTooSmall,
  OrderTooLarge,
  FullSet,
  NotConnectedConvex,
  EmptyReport,
  InvalidParameter,
  Overflow,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Single exception type for every recoverable library failure; `code()`
/// identifies the failure class so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dagconvex
