#ifndef WREG_ERRORS_HPP
#define WREG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wreg {

// Thrown when an instance exceeds a configured resource cap (lattice size,
// variable count, enumeration box).  Never an incorrect answer.
struct ResourceCapError : std::runtime_error {
  explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the closed-form predictors when the instance is not integrally
// closed (the formulas do not apply).
struct NotIntegrallyClosedError : std::runtime_error {
  explicit NotIntegrallyClosedError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a structural statement the code relies on fails on valid input
// (e.g. a generator with zero or several edge factorizations, or a missing
// colon witness).  Firing on valid input means a theorem check failed.
struct TheoremViolationError : std::logic_error {
  explicit TheoremViolationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wreg

#endif
