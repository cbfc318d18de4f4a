#pragma once

#include <stdexcept>
#include <string>

namespace spqg {

/// Error categories raised by the library. The numeric values are part of the
/// C API (see spqg.h) and must stay stable.
enum class ErrorCode : int {
  Overlap = 1,
  Coverage = 2,
  Range = 3,
  Divisibility = 4,
  LevelMismatch = 5,
  InterfaceMismatch = 6,
  EmptyRow = 7,
  ShapeMismatch = 8,
  NotApplicable = 9,
  BoundExceeded = 10,
  Grading = 11,
  Size = 12,
  Shape = 13,
  IncompleteModel = 14,
  OracleMismatch = 15,
  Precondition = 16,
  Parse = 17,
  Io = 18,
  Internal = 19,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spqg
