#pragma once

#include <stdexcept>

namespace azimuth {

/// Coefficient data that cannot describe a normalizable quantum state
/// (all amplitudes zero, a Landau label m < 0, or a claimed-normalized
/// vector whose norm is off by more than the tolerance).
class invalid_state_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two floating-point routes to the same quantity disagreed beyond
/// tolerance, or an intermediate violated an exact identity (e.g. a
/// moment that must be real kept a large imaginary residue).
class numerical_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A quadrature estimate failed its stability check: doubling the node
/// count moved the result, or the grid cannot even reproduce the norm.
class convergence_error : public numerical_error {
 public:
  using numerical_error::numerical_error;
};

}  // namespace azimuth
