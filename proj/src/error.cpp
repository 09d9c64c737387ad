#include "taspm/error.hpp"

namespace taspm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyItemset: return "EmptyItemset";
    case ErrorCode::UnsortedItemset: return "UnsortedItemset";
    case ErrorCode::BadItem: return "BadItem";
    case ErrorCode::NotGreater: return "NotGreater";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EmptyDatabase: return "EmptyDatabase";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::BadThreshold: return "BadThreshold";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorCode code, const std::string& what, std::size_t line) {
  std::string msg = to_string(code);
  if (line != 0) msg += " at line " + std::to_string(line);
  msg += ": ";
  msg += what;
  return msg;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& what, std::size_t line)
    : std::runtime_error(decorate(code, what, line)), code_(code), line_(line) {}

}  // namespace taspm
