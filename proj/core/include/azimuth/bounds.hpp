#pragma once

#include "azimuth/moments.hpp"

namespace azimuth {

enum class Observable { phi, lz };

/// Comparator constants, in units of hbar. The first is the x-p style
/// hbar/2 claim sometimes transplanted to the angle pair; the second is
/// the hbar lower bound proposed for it in the pedagogical literature.
/// Neither is a theorem for periodic states; both are kept for comparison.
inline constexpr double kNaiveBound = 0.5;
inline constexpr double kStrangeBound = 1.0;

/// Tolerance used by the holds_* flags when comparing product vs bound.
inline constexpr double kFlagTolerance = 1e-12;

/// sqrt(<Q^2> - <Q>^2). A variance in [-1e-12, 0) is clamped to zero;
/// anything lower means the moments are inconsistent -> numerical_error.
double rms_deviation(const MomentSet& moments, Observable which);

struct UncertaintyReport {
  double delta_phi = 0.0;
  double delta_lz = 0.0;
  double product = 0.0;      // delta_phi * delta_lz
  double bound_exact = 0.0;    // (1/2)|2 pi rho(2 pi) - 1|
  double bound_general = 0.0;  // (1/2)|<L_z psi|phi psi> - <phi psi|L_z psi>|
  double bound_tight = 0.0;    // Schwarz bound via its two-part decomposition
  double bound_naive = kNaiveBound;
  double bound_strange = kStrangeBound;
  double pi_delta_lz = 0.0;  // comparator: pi * delta_lz
  bool holds_exact = false;
  bool holds_naive = false;
  bool holds_strange = false;
};

/// The exact boundary-term lower bound (1/2)|2 pi rho(2 pi) - 1|.
double boundary_bound(const AngularState& state);
double boundary_bound(const LandauState& state);

/// The general lower bound (1/2)|<A psi|B psi> - <B psi|A psi>| with the
/// inner products taken as written.
double general_bound(const AngularState& state);
double general_bound(const LandauState& state);

/// The full Schwarz bound |<f|g>| with f = (phi - <phi>)psi and
/// g = (L_z - <L_z>)psi, computed through the decomposition
///   |<f|g>|^2 = (1/4)(<f|g> + <g|f>)^2 + (1/4)|<f|g> - <g|f>|^2,
/// whose second term alone is the general bound squared.
double tight_bound(const AngularState& state);
double tight_bound(const LandauState& state);

/// Deviations, product, every bound, comparators, and the holds_* flags.
/// holds_exact is a theorem for valid states; report() asserts it and
/// throws numerical_error if the computation ever contradicts it.
UncertaintyReport report(const AngularState& state);
UncertaintyReport report(const LandauState& state);

}  // namespace azimuth
