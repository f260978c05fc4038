#pragma once

#include <stdexcept>
#include <string>

namespace forbconf {

enum class ErrorCode {
  invalid_argument = 1,
  out_of_range = 2,
  parse_error = 3,
  limit_exceeded = 4,
  precondition = 5,
  internal = 6,
};

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace forbconf
