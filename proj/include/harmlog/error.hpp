#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmlog {

enum class ErrorKind {
  domain,            // argument outside the formula's domain
  negative_input,    // p/q < 0: no real logarithm
  zero_or_infinite,  // p = 0 or q = 0
  overflow,          // index product or result not representable
  integrity,         // two reference routes disagree
  invalid_grid,
  io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace harmlog
