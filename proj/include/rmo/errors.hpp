#pragma once

#include <stdexcept>
#include <string>

namespace rmo {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tangent vectors (or a tangent and a point) refer to different base points.
class BaseMismatchError : public Error {
 public:
  using Error::Error;
};

/// Ambient coordinates do not have the shape the manifold expects.
class ShapeMismatchError : public Error {
 public:
  using Error::Error;
};

/// A point violates the manifold's defining constraint.
class InfeasiblePointError : public Error {
 public:
  using Error::Error;
};

/// Invalid handle or problem parameters.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

/// The retraction cannot be evaluated: the step annihilates an entry or makes
/// x + v rank deficient.
class DegenerateStepError : public Error {
 public:
  using Error::Error;
};

/// HPD retraction left the cone; the caller must shrink the step.
class StepTooLongError : public Error {
 public:
  using Error::Error;
};

/// Line search called with a direction that is not a descent direction.
class NotDescentDirectionError : public Error {
 public:
  using Error::Error;
};

/// Backtracking exhausted without satisfying sufficient decrease.
class StepTooSmallError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive search exceeds its combinatorial or grid budget.
class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

}  // namespace rmo
