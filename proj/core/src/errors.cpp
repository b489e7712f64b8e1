#include "lfw/errors.hpp"

namespace lfw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_modulus: return "invalid-modulus";
    case ErrorKind::invalid_inducing: return "invalid-inducing";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::near_zero: return "near-zero-of-L";
    case ErrorKind::resource: return "resource";
    case ErrorKind::unsupported_index: return "unsupported-index";
    case ErrorKind::scan_failure: return "scan-failure";
    case ErrorKind::parse: return "parse";
    case ErrorKind::verification: return "verification";
    case ErrorKind::coverage: return "coverage";
    case ErrorKind::fit: return "fit";
    case ErrorKind::io: return "io";
    case ErrorKind::network: return "network";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace lfw
