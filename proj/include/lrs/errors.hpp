#pragma once

#include <stdexcept>
#include <string>

namespace lrs {

// Every failure the library reports derives from lrs::Error and carries a
// stable machine-readable code used by the CLI's error envelope.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(std::move(code)), context_(std::move(context)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

private:
  std::string code_;
  std::string context_;
};

/// Precondition of an operation violated by its arguments.
class DomainError : public Error {
public:
  explicit DomainError(const std::string& message, std::string context = {})
      : Error("domain_error", message, std::move(context)) {}
};

/// A configured size limit (field degree, recurrence order, big-integer budget) was hit.
class CapacityError : public Error {
public:
  explicit CapacityError(const std::string& message, std::string context = {})
      : Error("capacity_error", message, std::move(context)) {}
};

/// Interval refinement reached the precision cap without deciding a comparison.
class PrecisionError : public Error {
public:
  explicit PrecisionError(const std::string& message, std::string context = {})
      : Error("precision_error", message, std::move(context)) {}
};

/// Input violates a hypothesis of the growth theorem (e.g. dominant modulus <= 1).
class AssumptionViolation : public Error {
public:
  explicit AssumptionViolation(const std::string& message, std::string context = {})
      : Error("assumption_violation", message, std::move(context)) {}
};

/// Sequence is degenerate (a ratio of distinct roots is a root of unity) or identically zero.
class DegenerateError : public Error {
public:
  explicit DegenerateError(const std::string& message, std::string context = {})
      : Error("degenerate", message, std::move(context)) {}
};

/// A quantity exists mathematically but this implementation cannot compute it
/// exactly (e.g. a valuation at a prime dividing the index of Z[gamma]).
class UnavailableError : public Error {
public:
  explicit UnavailableError(const std::string& message, std::string context = {})
      : Error("unavailable", message, std::move(context)) {}
};

/// Broken internal invariant; always a bug.
class InternalError : public Error {
public:
  explicit InternalError(const std::string& message, std::string context = {})
      : Error("internal_error", message, std::move(context)) {}
};

}  // namespace lrs
