// error.hpp — domain-error exception carrying a stable machine-readable name.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace knaster {

// Thrown when an operation's mathematical precondition or invariant fails.
// `name()` is a stable identifier ("NotSurjective", "CodomainMismatch", ...)
// suitable for scripted matching; what() prepends it to a human-readable
// detail message.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string name, const std::string& detail)
      : std::runtime_error(name + ": " + detail), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

[[noreturn]] inline void fail(std::string name, const std::string& detail) {
  throw DomainError(std::move(name), detail);
}

}  // namespace knaster
