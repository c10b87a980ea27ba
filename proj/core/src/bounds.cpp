#include "azimuth/bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace azimuth {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kVarianceFloor = -1e-12;

double boundary_bound_from(double boundary_density) {
  return 0.5 * std::abs(kTwoPi * boundary_density - 1.0);
}

template <typename State>
double tight_bound_impl(const State& state) {
  const double mean_phi = phi_moment(state, 1);
  const double mean_lz = lz_moment(state, 1);
  const CrossInnerProducts cross = cross_inner_products(state);
  // f = (phi - <phi>) psi, g = (L_z - <L_z>) psi; the mixed terms collapse
  // because <phi psi|psi> = <phi> and <psi|L_z psi> = <L_z> are real.
  const Complex fg = cross.phi_lz - mean_phi * mean_lz;  // <f|g>
  const Complex gf = cross.lz_phi - mean_phi * mean_lz;  // <g|f>
  const Complex symmetric = fg + gf;
  if (!(std::abs(symmetric.imag()) < 1e-12)) {
    throw numerical_error(
        "tight_bound: symmetric part kept an imaginary residue of " +
        std::to_string(symmetric.imag()));
  }
  return std::sqrt(0.25 * symmetric.real() * symmetric.real() +
                   0.25 * std::norm(fg - gf));
}

template <typename State>
UncertaintyReport report_impl(const State& state) {
  const MomentSet ms = moments(state);
  UncertaintyReport r;
  r.delta_phi = rms_deviation(ms, Observable::phi);
  r.delta_lz = rms_deviation(ms, Observable::lz);
  r.product = r.delta_phi * r.delta_lz;
  r.bound_exact = boundary_bound_from(ms.boundary_density);
  r.bound_general = 0.5 * std::abs(ms.cross_antisym);
  r.bound_tight = tight_bound_impl(state);
  r.pi_delta_lz = std::numbers::pi * r.delta_lz;
  r.holds_exact = r.product >= r.bound_exact - kFlagTolerance;
  r.holds_naive = r.product >= r.bound_naive - kFlagTolerance;
  r.holds_strange = r.product >= r.bound_strange - kFlagTolerance;
  if (!r.holds_exact) {
    // the boundary-term bound is a theorem; tripping it means the moments
    // are inconsistent, not that the state is interesting
    throw numerical_error(
        "report: product " + std::to_string(r.product) +
        " fell below the exact bound " + std::to_string(r.bound_exact));
  }
  return r;
}

}  // namespace

double rms_deviation(const MomentSet& moments, Observable which) {
  const double variance = which == Observable::phi ? moments.phi_variance()
                                                   : moments.lz_variance();
  if (variance < kVarianceFloor) {
    throw numerical_error("rms_deviation: variance " +
                          std::to_string(variance) +
                          " is negative beyond rounding");
  }
  return std::sqrt(std::max(variance, 0.0));
}

double boundary_bound(const AngularState& state) {
  return boundary_bound_from(boundary_density(state));
}
double boundary_bound(const LandauState& state) {
  return boundary_bound_from(boundary_density(state));
}

double general_bound(const AngularState& state) {
  return 0.5 * cross_antisym(state);
}
double general_bound(const LandauState& state) {
  return 0.5 * cross_antisym(state);
}

double tight_bound(const AngularState& state) {
  return tight_bound_impl(state);
}
double tight_bound(const LandauState& state) {
  return tight_bound_impl(state);
}

UncertaintyReport report(const AngularState& state) {
  return report_impl(state);
}
UncertaintyReport report(const LandauState& state) {
  return report_impl(state);
}

}  // namespace azimuth
