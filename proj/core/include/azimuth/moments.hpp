#pragma once

#include "azimuth/states.hpp"

namespace azimuth {

/// Every expectation value the bound layer consumes, for one state.
/// Angular momentum in units of hbar, angles in radians.
struct MomentSet {
  double mean_phi = 0.0;          // <phi>
  double mean_phi_sq = 0.0;       // <phi^2>
  double mean_lz = 0.0;           // <L_z>
  double mean_lz_sq = 0.0;        // <L_z^2>
  double boundary_density = 0.0;  // |psi(2 pi)|^2, resp. rho(2 pi)
  double cross_antisym = 0.0;     // Im(<L_z psi|phi psi> - <phi psi|L_z psi>)

  double phi_variance() const noexcept {
    return mean_phi_sq - mean_phi * mean_phi;
  }
  double lz_variance() const noexcept {
    return mean_lz_sq - mean_lz * mean_lz;
  }
};

/// Checks the identities every valid MomentSet obeys (0 <= <phi> <= 2 pi,
/// boundary density non-negative); throws numerical_error on violation.
void validate(const MomentSet& moments);

/// The two cross inner products evaluated exactly as written; no operator
/// is moved across the bracket, so the boundary term they carry survives.
struct CrossInnerProducts {
  Complex phi_lz;  // <phi psi | L_z psi>
  Complex lz_phi;  // <L_z psi | phi psi>
};

/// <L_z^k>, k = 1 or 2. Identical formula for both state kinds because the
/// radial factors are orthonormal on the diagonal.
double lz_moment(const AngularState& state, int k);
double lz_moment(const LandauState& state, int k);

/// <phi^k>, k = 1 or 2, on the interval [0, 2 pi).
double phi_moment(const AngularState& state, int k);
double phi_moment(const LandauState& state, int k);

/// Probability density at the boundary angle phi = 2 pi: |psi(2 pi)|^2 for
/// an AngularState, the radially integrated rho(2 pi) for a LandauState.
double boundary_density(const AngularState& state);
double boundary_density(const LandauState& state);

CrossInnerProducts cross_inner_products(const AngularState& state);
CrossInnerProducts cross_inner_products(const LandauState& state);

/// |<L_z psi|phi psi> - <phi psi|L_z psi>| in units of hbar. Nonzero exactly
/// because phi psi fails to be 2 pi periodic; integration by parts ties it
/// to the boundary density: value = |2 pi |psi(2 pi)|^2 - 1|.
double cross_antisym(const AngularState& state);
double cross_antisym(const LandauState& state);

/// All of the above bundled into one MomentSet.
MomentSet moments(const AngularState& state);
MomentSet moments(const LandauState& state);

}  // namespace azimuth
