#pragma once

#include <stdexcept>
#include <string>

namespace lensknot {

enum class ErrorCode {
  InvalidArgument,
  OutOfRange,
  DivisionByZero,
  NonExactDivision,
  SplitClosure,
  Parse,
  Io,
  Internal,
};

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lensknot
