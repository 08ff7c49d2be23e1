#pragma once

#include <stdexcept>
#include <string>

namespace asg {

// Caller broke a documented precondition (length mismatch, bad domain, ...).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

// A value is outside the mathematical domain of an operation (c <= 1, p > 1).
class DomainError : public ContractViolation {
 public:
  explicit DomainError(const std::string& what) : ContractViolation(what) {}
};

// The advice tape does not contain a well-formed encoding.
class MalformedAdvice : public std::runtime_error {
 public:
  explicit MalformedAdvice(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive search would exceed its configured guard. Never a wrong answer.
class ResourceLimitExceeded : public std::runtime_error {
 public:
  explicit ResourceLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace asg
