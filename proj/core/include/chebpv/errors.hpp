#pragma once

#include <stdexcept>
#include <string>

namespace chebpv {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad argument values: node counts, degrees, sweep bounds.
struct ArgumentError : Error {
  using Error::Error;
};

/// Evaluation point outside [-1, 1].
struct DomainError : Error {
  using Error::Error;
};

/// Integration interval with a >= b.
struct InvalidInterval : Error {
  using Error::Error;
};

/// Singularity location not strictly inside (a, b).
struct EndpointSingularity : Error {
  using Error::Error;
};

/// Declared singularity order p > 1. Hadamard finite-part integrals are
/// out of scope; principal values exist only for p <= 1.
struct HypersingularUnsupported : Error {
  using Error::Error;
};

/// A sampled function value came back NaN or infinite.
struct NonFiniteSample : Error {
  NonFiniteSample(double at, const std::string& message)
      : Error(message), location(at) {}
  double location;
};

/// Adaptive bisection hit its depth cap before reaching the tolerance.
struct ToleranceNotMet : Error {
  using Error::Error;
};

}  // namespace chebpv
