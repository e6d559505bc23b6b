#pragma once

#include <stdexcept>
#include <string>

namespace sumrules {

// A mathematical precondition does not hold (undefined floor bound, r+1 > n, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Missing or malformed input: unknown names, absent parameters, parse failures.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An intentional desk-scale cap was exceeded (enumeration ceiling, sweep size).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sumrules
