#pragma once

#include <stdexcept>
#include <string>

namespace pascalrows {

/// Input outside an operation's domain (bad base, non-prime modulus, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Division by zero or a zero denominator.
class ArithmeticError : public std::domain_error {
 public:
  explicit ArithmeticError(const std::string& what) : std::domain_error(what) {}
};

/// A size guard or work budget was exceeded.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity failed (e.g. a count came out non-integral).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pascalrows
