#pragma once

#include <stdexcept>
#include <string>

namespace bvlab {

// Base class for all library-level failures, so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// from_cartesian: input vector too short to define a direction.
struct ZeroVectorError : Error {
  using Error::Error;
};

// A disorder parameter outside its admissible range.
struct DegenerateParamError : Error {
  using Error::Error;
};

// Squeezed-disorder rejection sampler made no progress (inconsistent D, r).
struct RejectionStallError : Error {
  using Error::Error;
};

// Secret string and noise realization disagree on the number of qubits.
struct LengthMismatchError : Error {
  using Error::Error;
};

// Requested scaled strength is not attainable by the family.
struct UnreachableStrengthError : Error {
  using Error::Error;
};

// Normal equations of the least-squares step are singular.
struct SingularJacobianError : Error {
  using Error::Error;
};

// Iterative solver hit its iteration cap.
struct NotConvergedError : Error {
  using Error::Error;
};

// Every sampled success probability was exactly zero.
struct AllZeroError : Error {
  using Error::Error;
};

}  // namespace bvlab
