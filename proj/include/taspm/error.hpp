#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taspm {

enum class ErrorCode {
  EmptyItemset,
  UnsortedItemset,
  BadItem,
  NotGreater,
  SyntaxError,
  EmptyDatabase,
  TooLarge,
  LengthMismatch,
  BadThreshold,
  BadParams,
  Io,
};

const char* to_string(ErrorCode code);

// Every failure raised by the library. `line()` is 1-based and only
// meaningful for parse errors (0 otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace taspm
