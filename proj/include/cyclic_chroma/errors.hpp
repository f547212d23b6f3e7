#pragma once

#include <stdexcept>
#include <string>

namespace cyclic_chroma {

/// Argument outside the mathematical domain of an operation (n < 3, index out of range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pattern builder asked for an (n, t) its pattern cannot realize.
class InfeasibleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a configured resource bound (search size, materialization cap).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed coloring record.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cyclic_chroma
