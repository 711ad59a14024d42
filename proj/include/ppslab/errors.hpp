// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ppslab {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands with incompatible Hilbert-space or ontic-space dimensions.
struct DimensionMismatchError : Error {
  using Error::Error;
};

// A constructed object fails its defining invariants (non-hermitian
// projector, incomplete PVM, distribution not summing to one, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Conditioning on an outcome whose probability vanishes.
struct ZeroProbabilityError : Error {
  using Error::Error;
};

// The post-selection event is unreachable for the given intermediate
// measurement (ABL/PPS denominator vanishes).
struct ImpossiblePostSelectionError : Error {
  using Error::Error;
};

// An outcome or state label not present in the referenced object.
struct UnknownLabelError : Error {
  using Error::Error;
};

// A search exceeded its configured cap.
struct SearchCapError : Error {
  using Error::Error;
};

// Scenario or model file could not be parsed.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ppslab
