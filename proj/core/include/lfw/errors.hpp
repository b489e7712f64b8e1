#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lfw {

enum class ErrorKind {
  invalid_modulus,
  invalid_inducing,
  invalid_argument,
  domain,
  pole,
  near_zero,
  resource,
  unsupported_index,
  scan_failure,
  parse,
  verification,
  coverage,
  fit,
  io,
  network,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so the CLI can map it to
// an exit code and tests can check the category without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace lfw
