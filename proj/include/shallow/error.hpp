#pragma once

#include <stdexcept>
#include <string>

namespace shallow {

/// Malformed input: unknown ids, bad JSON, out-of-range parameters.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on data that violates its stated precondition.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// An exact oracle was asked to go beyond its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction produced an object that failed its own post-check.
/// Carries the name of the failing claim.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(std::string claim, const std::string& what)
      : std::runtime_error(claim + ": " + what), claim_(std::move(claim)) {}

  const std::string& claim() const noexcept { return claim_; }

 private:
  std::string claim_;
};

/// Outcome of a verifier. `clause` names the first violated condition.
struct Verdict {
  bool accepted = true;
  std::string clause;
  std::string detail;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string clause, std::string detail) {
    return {false, std::move(clause), std::move(detail)};
  }

  explicit operator bool() const noexcept { return accepted; }
};

}  // namespace shallow
