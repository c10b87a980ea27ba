#pragma once

#include <functional>
#include <vector>

#include "azimuth/moments.hpp"

namespace azimuth {

/// Controls for the quadrature oracle. The oracle is the independent
/// verification path: it never reuses the closed-form pair sums, it
/// samples wavefunctions pointwise and integrates.
struct QuadratureSpec {
  int angular_nodes = 128;      // Gauss-Legendre nodes on [0, 2 pi], >= 16
  int radial_nodes = 128;       // Gauss-Legendre nodes on [0, radial_cutoff]
  double radial_cutoff = 12.0;  // magnetic lengths; must cover the state
  double abs_tol = 1e-10;       // stability budget for the doubling check
  bool check_convergence = true;  // re-integrate at doubled nodes and compare
};

/// Throws std::domain_error if the spec is unusable.
void validate(const QuadratureSpec& spec);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule with n nodes mapped onto [lo, hi]. Node tables on
/// the reference interval are computed once per n and shared read-only.
QuadratureRule gauss_legendre(int n, double lo, double hi);

/// Integral of a sampled complex function over [0, 2 pi]. The interval is
/// treated as a plain finite interval: no periodization, because the
/// boundary discontinuity of phi psi is exactly the physics under study.
/// Non-finite samples raise numerical_error.
Complex integrate_angular(const std::function<Complex(double)>& integrand,
                          const QuadratureSpec& spec = {});

/// Integral of a sampled real function over [0, radial_cutoff]. The cutoff
/// stands in for infinity; choose it so the integrand tail is negligible
/// against abs_tol.
double integrate_radial(const std::function<double(double)>& integrand,
                        const QuadratureSpec& spec = {});

/// Every MomentSet field recomputed by quadrature from pointwise samples
/// of psi. L_z is applied analytically to the basis (the derivative of
/// e^{im phi} brings down a factor m); nothing is differentiated
/// numerically. With check_convergence set, the whole set is recomputed
/// at doubled node counts and any field moving by abs_tol or more raises
/// convergence_error; a grid that cannot reproduce unit norm raises it
/// immediately.
MomentSet oracle_moments(const AngularState& state,
                         const QuadratureSpec& spec = {});
MomentSet oracle_moments(const LandauState& state,
                         const QuadratureSpec& spec = {});

/// <phi psi|L_z psi> and <L_z psi|phi psi> by quadrature, as written.
CrossInnerProducts oracle_cross_products(const AngularState& state,
                                         const QuadratureSpec& spec = {});
CrossInnerProducts oracle_cross_products(const LandauState& state,
                                         const QuadratureSpec& spec = {});

}  // namespace azimuth
