#pragma once

#include <stdexcept>
#include <string>

namespace crinv {

/// Base of all domain-rule violations. The CLI maps these to exit code 3.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Arithmetic tried to mix scalars from two different fields Q(sqrt(d)).
struct DiscriminantMismatch : Error {
  using Error::Error;
};

/// GJMS order k = w + w' + n + 1 is not a positive integer.
struct InvalidOrder : Error {
  using Error::Error;
};

/// P'-eigenvalue requested on a mode with p != n|q|.
struct NotPluriharmonic : Error {
  using Error::Error;
};

/// CR dimension parameter n outside the range an operation supports.
struct InvalidDimension : Error {
  using Error::Error;
};

/// A manifold spec or mode violates one of its declared invariants.
struct SpecViolation : Error {
  using Error::Error;
};

/// Volume back-out requested with lambda = 0.
struct ZeroEinsteinConstant : Error {
  using Error::Error;
};

/// Malformed input (rational literals, JSON specs). The CLI maps these to
/// exit code 2, keeping them distinct from domain violations.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace crinv
