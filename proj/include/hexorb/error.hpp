#pragma once

#include <stdexcept>
#include <string>

namespace hexorb {

/// Failure categories. The CLI maps each one onto a distinct exit code.
enum class ErrorKind {
  kBadInput,      // malformed document, value outside its domain
  kPrecondition,  // a construction premise does not hold for the input
  kStructural,    // input claimed membership but the structure disagrees
  kInternal,      // an internal cross-check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hexorb
