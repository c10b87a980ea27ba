// Acceptance suite: the eight headline checks the library must pass, one
// printed line each. Exits with the number of failed criteria, so a zero
// exit status is a full pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <vector>

#include "azimuth/bounds.hpp"
#include "azimuth/family.hpp"
#include "azimuth/quadrature.hpp"
#include "test_support.hpp"

using namespace azimuth;
using std::numbers::pi;

namespace {

int failures = 0;

void verdict(int index, const char* name, bool ok) {
  std::printf("[%s] %d. %s\n", ok ? "PASS" : "FAIL", index, name);
  if (!ok) ++failures;
}

bool near(double value, double target, double tolerance) {
  return std::abs(value - target) <= tolerance;
}

// 1. The equal-weight two-mode state: every closed form on the nose.
void criterion_reference_state() {
  const double w = 1.0 / std::sqrt(2.0);
  const AngularState state({{0, {w, 0.0}}, {1, {w, 0.0}}});
  const UncertaintyReport rep = report(state);
  const MomentSet ms = moments(state);
  bool ok = near(rep.delta_lz, 0.5, 1e-12);
  ok = ok && near(ms.mean_lz_sq, 0.5, 1e-12);
  ok = ok && near(rep.delta_phi, std::sqrt(2.0 + pi * pi / 3.0), 1e-10);
  ok = ok && near(rep.bound_exact, 0.5, 1e-12);
  ok = ok && near(rep.pi_delta_lz, pi / 2.0, 1e-12);
  verdict(1, "two-mode reference state closed forms", ok);
}

// 2. The product crosses one half at four parameter values.
void criterion_product_crossings() {
  const CrossingSet crossings =
      find_crossings(SweepQuantity::product, 0.5, 10000);
  const double expected[] = {-0.91, -0.41, 0.25, 0.97};
  bool ok = crossings.roots.size() == 4;
  if (ok) {
    for (int i = 0; i < 4; ++i) {
      ok = ok && near(crossings.roots[i], expected[i], 0.01);
    }
  }
  verdict(2, "product = 1/2 at four parameter values", ok);
}

// 3. The pi comparator crosses one half on the quartic level set.
void criterion_pi_crossings() {
  const CrossingSet crossings =
      find_crossings(SweepQuantity::pi_delta_lz, 0.5, 10000);
  bool ok = crossings.roots.size() == 4;
  if (ok) {
    ok = ok && near(std::abs(crossings.roots[0]), 0.99, 0.01);
    ok = ok && near(std::abs(crossings.roots[1]), 0.16, 0.01);
    ok = ok && near(std::abs(crossings.roots[2]), 0.16, 0.01);
    ok = ok && near(std::abs(crossings.roots[3]), 0.99, 0.01);
    for (const double a : crossings.roots) {
      ok = ok && std::abs(a * a * (1.0 - a * a) - 1.0 / (4.0 * pi * pi)) <
                     1e-8;
    }
  }
  verdict(3, "pi comparator crossings solve the quartic", ok);
}

// 4. The angular spread stays inside (1, pi) across the family.
void criterion_spread_window() {
  const std::vector<FamilyPoint> rows = sweep(-1.0, 1.0, 10000);
  double min_phi = 10.0;
  double max_phi = 0.0;
  for (const FamilyPoint& row : rows) {
    min_phi = std::min({min_phi, row.delta_phi_closed, row.delta_phi_engine});
    max_phi = std::max({max_phi, row.delta_phi_closed, row.delta_phi_engine});
  }
  bool ok = min_phi >= 1.0 && max_phi < pi;
  const double at_edges = pi / std::sqrt(3.0);
  ok = ok && near(closed_forms(0.0).delta_phi, at_edges, 1e-10);
  ok = ok && near(closed_forms(1.0).delta_phi, at_edges, 1e-10);
  ok = ok && near(closed_forms(-1.0).delta_phi, at_edges, 1e-10);
  verdict(4, "angular spread stays within (1, pi)", ok);
}

// 5. The equal-weight three-mode Landau state, closed form and oracle.
void criterion_landau_state() {
  const double w = 1.0 / std::sqrt(3.0);
  const LandauState state({{0, {w, 0.0}}, {1, {w, 0.0}}, {2, {w, 0.0}}});
  const UncertaintyReport rep = report(state);
  const MomentSet ms = moments(state);
  const double s_sum = pi * pi / 3.0 +
                       (4.0 / 3.0) * (radial_overlap(0, 1) +
                                      radial_overlap(1, 2)) +
                       radial_overlap(0, 2) / 3.0;
  bool ok = near(rep.product, 1.99, 0.01);
  ok = ok && near(rep.bound_exact, 0.844, 0.005);
  ok = ok && near(rep.delta_lz, std::sqrt(2.0 / 3.0), 1e-12);
  ok = ok && near(ms.phi_variance(), s_sum, 1e-12);

  const MomentSet oracle = oracle_moments(state);
  ok = ok && near(oracle.mean_phi, ms.mean_phi, 1e-8);
  ok = ok && near(oracle.mean_phi_sq, ms.mean_phi_sq, 1e-8);
  ok = ok && near(oracle.mean_lz, ms.mean_lz, 1e-8);
  ok = ok && near(oracle.mean_lz_sq, ms.mean_lz_sq, 1e-8);
  ok = ok && near(oracle.boundary_density, ms.boundary_density, 1e-8);
  ok = ok && near(oracle.cross_antisym, ms.cross_antisym, 1e-8);
  verdict(5, "three-mode Landau state closed forms and oracle", ok);
}

struct RandomSuite {
  bool exact_bound_ok = true;
  bool violations_ok = false;
  bool dual_path_ok = true;
  bool oracle_ok = true;
  bool ordering_ok = true;
};

// 6 + 7 + 8 share one pass over 1000 + 1000 random states.
RandomSuite run_random_suite() {
  RandomSuite suite;
  std::mt19937 rng(273015099);
  QuadratureSpec spec;
  spec.check_convergence = false;  // one quadrature pass per state

  auto examine = [&suite, &spec](const auto& state) {
    const UncertaintyReport rep = report(state);
    suite.exact_bound_ok =
        suite.exact_bound_ok && rep.product >= rep.bound_exact - 1e-10;
    suite.dual_path_ok =
        suite.dual_path_ok &&
        std::abs(rep.bound_general - rep.bound_exact) < 1e-10;
    suite.ordering_ok = suite.ordering_ok &&
                        rep.bound_tight >= rep.bound_general - 1e-12 &&
                        rep.product >= rep.bound_tight - 1e-10;

    const MomentSet closed = moments(state);
    const MomentSet oracle = oracle_moments(state, spec);
    suite.oracle_ok = suite.oracle_ok &&
                      std::abs(closed.mean_phi - oracle.mean_phi) < 1e-8 &&
                      std::abs(closed.mean_phi_sq - oracle.mean_phi_sq) <
                          1e-8 &&
                      std::abs(closed.mean_lz - oracle.mean_lz) < 1e-8 &&
                      std::abs(closed.mean_lz_sq - oracle.mean_lz_sq) <
                          1e-8 &&
                      std::abs(closed.boundary_density -
                               oracle.boundary_density) < 1e-8 &&
                      std::abs(closed.cross_antisym - oracle.cross_antisym) <
                          1e-8;
  };

  for (int trial = 0; trial < 1000; ++trial) {
    examine(test_support::random_angular(rng));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    examine(test_support::random_landau(rng));
  }

  // at least one family member must beat both comparator claims
  const UncertaintyReport weak = report(family_state(0.05));
  suite.violations_ok = weak.product < kNaiveBound &&
                        weak.product < kStrangeBound && weak.holds_exact;
  return suite;
}

}  // namespace

int main() {
  criterion_reference_state();
  criterion_product_crossings();
  criterion_pi_crossings();
  criterion_spread_window();
  criterion_landau_state();

  const RandomSuite suite = run_random_suite();
  verdict(6, "exact bound over 2000 random states, comparators violated",
          suite.exact_bound_ok && suite.violations_ok);
  verdict(7, "dual-path bounds and oracle agreement",
          suite.dual_path_ok && suite.oracle_ok);
  verdict(8, "bound ordering across random states", suite.ordering_ok);

  if (failures == 0) {
    std::printf("all acceptance criteria hold\n");
  } else {
    std::printf("%d acceptance criteria failed\n", failures);
  }
  return failures;
}
