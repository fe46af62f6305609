#pragma once

#include <stdexcept>
#include <string>

namespace ghostkit {

enum class ErrorKind {
  InvalidInput,
  InternalError,
  UnsupportedGenerator,
  PreconditionFailed,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void invalid_input(const std::string& what) {
  throw Error(ErrorKind::InvalidInput, what);
}

[[noreturn]] inline void internal_error(const std::string& what) {
  throw Error(ErrorKind::InternalError, what);
}

}  // namespace ghostkit
