#pragma once

#include <iosfwd>
#include <vector>

#include "azimuth/bounds.hpp"

namespace azimuth {

/// One row of a parameter sweep over the two-mode family
///
///   psi(a, phi) = (a + sqrt(1 - a^2) e^{i phi}) / sqrt(2 pi),  -1 <= a <= 1.
///
/// delta_phi is recorded twice on purpose: once from the closed forms and
/// once from the moment engine. The rows double as a regression record of
/// the two paths agreeing.
struct FamilyPoint {
  double a = 0.0;
  double delta_phi_closed = 0.0;
  double delta_phi_engine = 0.0;
  double delta_lz = 0.0;  // engine value; closed form is r_of_a
  double r_of_a = 0.0;    // R(a) = |a| sqrt(1 - a^2), the exact bound
  double product = 0.0;
  double pi_delta_lz = 0.0;
};

/// Closed forms for the family: the exact bound R(a) = |a| sqrt(1 - a^2)
/// (which equals Delta L_z), and
/// Delta phi = sqrt(pi^2/3 + 4 a sqrt(1 - a^2)) -- note the signed term,
/// so the spread is not symmetric under a -> -a.
struct FamilyClosedForms {
  double r_of_a = 0.0;
  double delta_lz = 0.0;
  double delta_phi = 0.0;
};

/// The family member as an AngularState (c_0 = a, c_1 = sqrt(1 - a^2)).
/// Throws std::domain_error for |a| > 1.
AngularState family_state(double a);

FamilyClosedForms closed_forms(double a);

/// Uniform sweep over [a_min, a_max] inclusive, n_points >= 2 rows.
/// Each row carries both the closed-form and the engine values.
std::vector<FamilyPoint> sweep(double a_min, double a_max, int n_points);

enum class SweepQuantity { product, pi_delta_lz };

struct CrossingSet {
  double target = 0.0;
  std::vector<double> roots;  // ascending in a
  double bracket_width = 0.0;  // scan spacing that isolated each root
};

/// Roots of quantity(a) = target over a in [-1, 1]: a uniform scan with
/// n_grid points (>= 100) brackets sign changes, then bisection tightens
/// each bracket below 1e-10. An empty root list is a valid result.
CrossingSet find_crossings(SweepQuantity quantity, double target,
                           int n_grid = 10000);

/// CSV with header
///   a,delta_phi_closed,delta_phi_engine,delta_lz,r_of_a,product,pi_delta_lz
/// and 12 significant digits per value; byte-identical for identical input.
void write_sweep_csv(std::ostream& os, const std::vector<FamilyPoint>& rows);

}  // namespace azimuth
