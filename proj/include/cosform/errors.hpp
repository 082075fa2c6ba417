#pragma once

#include <stdexcept>
#include <string>

namespace cosform {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation at (or within tolerance of) a gamma pole, or a parameter on an
// excluded lattice.
struct PoleError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of the operation (|t| > 1, k+m > n,
// invalid weight, ...).
struct DomainError : Error {
  using Error::Error;
};

// Parameter outside the convergence range of an integral or sampler.
struct ConvergenceError : Error {
  using Error::Error;
};

// Rank-deficient or singular matrix input.
struct SingularInputError : Error {
  using Error::Error;
};

// Structurally invalid input (dimension mismatch, non-orthonormal frame, ...).
struct InvalidArgument : Error {
  using Error::Error;
};

}  // namespace cosform
