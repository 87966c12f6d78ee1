#pragma once

#include <stdexcept>
#include <string>

namespace krigbound {

/// Malformed arguments detected before any numerical work starts.
class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A matrix that should be symmetric positive definite failed to factor at
/// every jitter level. Carries the pivot that broke the final attempt;
/// a pivot near zero usually means duplicated points.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(const std::string& what, double smallest_pivot)
      : std::runtime_error(what), smallest_pivot_(smallest_pivot) {}
  double smallest_pivot() const noexcept { return smallest_pivot_; }

 private:
  double smallest_pivot_;
};

/// A model could not be assembled for numerical reasons other than an
/// outright duplicated point (ill-conditioned kernel matrix, failed
/// sampling factorization, ...).
class ConditioningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicatePointsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation would exceed a hard resource guard
/// (e.g. an evaluation grid with more than 10^7 nodes).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace krigbound
