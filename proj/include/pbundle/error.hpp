#pragma once

#include <stdexcept>
#include <string>

namespace pbundle {

enum class ErrorKind {
  invalid_input,   // malformed data, failed preconditions, unknown names
  verification,    // a checked property does not hold
  search_cap,      // a brute-force search would exceed the configured cap
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(const std::string& what) {
  throw Error(ErrorKind::invalid_input, what);
}

}  // namespace pbundle
