#pragma once

#include <stdexcept>
#include <string>

namespace gvkit {

/// Caller passed arguments that violate an operation's contract
/// (mismatched field specs, length mismatch, invalid ranges, ...).
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Arguments are well-formed but outside the mathematical domain
/// (inverse of zero, entropy argument past 1 - 1/q, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// The request exceeds a desk-scale enumeration cap.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gvkit
