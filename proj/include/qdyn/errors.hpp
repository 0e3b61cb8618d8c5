#pragma once

#include <stdexcept>
#include <string>

namespace qdyn {

/// Bad inputs or violated call contracts. The CLI maps these to exit code 2.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical guard trips: resolution exceeded, aliasing, lost mass.
/// The CLI maps these to exit code 3.
struct NumericalGuard : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidGrid : ValidationError {
  using ValidationError::ValidationError;
};
struct GridTooCoarse : ValidationError {
  using ValidationError::ValidationError;
};
struct GridTooSmall : ValidationError {
  using ValidationError::ValidationError;
};
struct NotNormalized : ValidationError {
  using ValidationError::ValidationError;
};
struct GridMismatch : ValidationError {
  using ValidationError::ValidationError;
};
struct InvalidHbar : ValidationError {
  using ValidationError::ValidationError;
};
struct NotHyperbolic : ValidationError {
  using ValidationError::ValidationError;
};
struct UnsupportedModel : ValidationError {
  using ValidationError::ValidationError;
};
struct InsufficientSpan : ValidationError {
  using ValidationError::ValidationError;
};
struct EmptyCurve : ValidationError {
  using ValidationError::ValidationError;
};

struct GridOverflow : NumericalGuard {
  using NumericalGuard::NumericalGuard;
};
struct InterpolationLoss : NumericalGuard {
  using NumericalGuard::NumericalGuard;
};
struct UnstableParameters : NumericalGuard {
  using NumericalGuard::NumericalGuard;
};
struct ZeroMass : NumericalGuard {
  using NumericalGuard::NumericalGuard;
};
struct FlowDiverged : NumericalGuard {
  using NumericalGuard::NumericalGuard;
};

}  // namespace qdyn
