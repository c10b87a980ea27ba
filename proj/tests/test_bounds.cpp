#include <cmath>
#include <numbers>
#include <random>

#include "azimuth/bounds.hpp"
#include "azimuth/family.hpp"
#include "azimuth/quadrature.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace azimuth;
using std::numbers::pi;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

AngularState reference_state() {
  return AngularState({{0, {kInvSqrt2, 0.0}}, {1, {kInvSqrt2, 0.0}}});
}

LandauState landau_three_mode() {
  const double w = 1.0 / std::sqrt(3.0);
  return LandauState({{0, {w, 0.0}}, {1, {w, 0.0}}, {2, {w, 0.0}}});
}
}  // namespace

TEST_CASE("rms_deviation") {
  const MomentSet ms = moments(reference_state());
  CHECK(rms_deviation(ms, Observable::lz) ==
        doctest::Approx(0.5).epsilon(1e-14));
  CHECK(rms_deviation(ms, Observable::phi) ==
        doctest::Approx(std::sqrt(2.0 + pi * pi / 3.0)).epsilon(1e-14));

  const MomentSet eigen = moments(AngularState({{5, {1.0, 0.0}}}));
  CHECK(rms_deviation(eigen, Observable::lz) == 0.0);

  SUBCASE("rounding-level negative variance clamps to zero") {
    MomentSet nudged = eigen;
    nudged.mean_lz_sq = nudged.mean_lz * nudged.mean_lz - 1e-13;
    CHECK(rms_deviation(nudged, Observable::lz) == 0.0);
  }
  SUBCASE("a genuinely negative variance is an inconsistency") {
    MomentSet broken = eigen;
    broken.mean_lz_sq = broken.mean_lz * broken.mean_lz - 1e-6;
    CHECK_THROWS_AS(rms_deviation(broken, Observable::lz), numerical_error);
  }
}

TEST_CASE("boundary bound") {
  CHECK(boundary_bound(reference_state()) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(boundary_bound(AngularState({{2, {1.0, 0.0}}})) ==
        doctest::Approx(0.0));
  CHECK(boundary_bound(landau_three_mode()) ==
        doctest::Approx(0.84443976987531055).epsilon(1e-13));
}

TEST_CASE("general bound") {
  CHECK(general_bound(reference_state()) ==
        doctest::Approx(0.5).epsilon(1e-13));
  CHECK(general_bound(AngularState({{2, {1.0, 0.0}}})) ==
        doctest::Approx(0.0));
  // family member a = 0.5: the bound equals R(0.5) = 0.5 sqrt(0.75)
  CHECK(general_bound(family_state(0.5)) ==
        doctest::Approx(0.5 * std::sqrt(0.75)).epsilon(1e-13));
}

TEST_CASE("tight bound") {
  SUBCASE("vanishes for eigenstates") {
    CHECK(tight_bound(AngularState({{3, {1.0, 0.0}}})) ==
          doctest::Approx(0.0));
  }
  SUBCASE("two-mode reference state, frozen oracle value") {
    // the symmetric part vanishes here, so the Schwarz bound collapses
    // onto the general bound
    CHECK(tight_bound(reference_state()) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK(tight_bound(reference_state()) >= 0.5 - 1e-12);
    CHECK(tight_bound(reference_state()) <= 1.0282);
  }
  SUBCASE("complex relative phase excites the symmetric part") {
    const AngularState twisted({{0, {0.8, 0.0}}, {1, {0.0, 0.6}}});
    // here 2 pi rho(2 pi) = 1 exactly, so the general bound is zero while
    // the Schwarz bound keeps the covariance term Im(w)(1 - 2 |c_1|^2)
    CHECK(general_bound(twisted) == doctest::Approx(0.0));
    CHECK(tight_bound(twisted) == doctest::Approx(0.1344).epsilon(1e-12));
  }
  SUBCASE("matches a quadrature rebuild of |<f|g>|") {
    std::mt19937 rng(6180339);
    for (int trial = 0; trial < 25; ++trial) {
      const AngularState state = test_support::random_angular(rng);
      QuadratureSpec spec;
      spec.check_convergence = false;
      const MomentSet ms = oracle_moments(state, spec);
      const CrossInnerProducts cip = oracle_cross_products(state, spec);
      const Complex fg = cip.phi_lz - ms.mean_phi * ms.mean_lz;
      const Complex gf = cip.lz_phi - ms.mean_phi * ms.mean_lz;
      const Complex sym = fg + gf;
      const double rebuilt = std::sqrt(0.25 * sym.real() * sym.real() +
                                       0.25 * std::norm(fg - gf));
      CHECK(tight_bound(state) == doctest::Approx(rebuilt).epsilon(1e-8));
    }
  }
}

TEST_CASE("report on the two-mode reference state") {
  const UncertaintyReport rep = report(reference_state());
  CHECK(rep.delta_lz == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(rep.delta_phi ==
        doctest::Approx(std::sqrt(2.0 + pi * pi / 3.0)).epsilon(1e-13));
  CHECK(rep.product ==
        doctest::Approx(1.149985666616812).epsilon(1e-13));
  CHECK(rep.bound_exact == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(rep.bound_general == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(rep.bound_tight == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.bound_naive == 0.5);
  CHECK(rep.bound_strange == 1.0);
  CHECK(rep.pi_delta_lz == doctest::Approx(pi / 2.0).epsilon(1e-13));
  CHECK(rep.holds_exact);
  CHECK(rep.holds_naive);
  CHECK(rep.holds_strange);
}

TEST_CASE("report on an eigenstate") {
  const UncertaintyReport rep = report(AngularState({{1, {1.0, 0.0}}}));
  CHECK(rep.delta_lz == 0.0);
  CHECK(rep.product == 0.0);
  CHECK(rep.bound_exact == doctest::Approx(0.0));
  CHECK(rep.pi_delta_lz == 0.0);
  CHECK(rep.holds_exact);       // 0 >= 0
  CHECK_FALSE(rep.holds_naive);  // 0 < 1/2
  CHECK_FALSE(rep.holds_strange);
}

TEST_CASE("report on the equal-weight three-mode Landau state") {
  const UncertaintyReport rep = report(landau_three_mode());
  CHECK(rep.delta_lz ==
        doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(rep.product == doctest::Approx(1.993409212381499).epsilon(1e-12));
  CHECK(rep.bound_exact ==
        doctest::Approx(0.84443976987531055).epsilon(1e-12));
  CHECK(rep.holds_exact);
  CHECK(rep.holds_naive);
  CHECK(rep.holds_strange);
}

TEST_CASE("a weakly split family state violates both comparator bounds") {
  const UncertaintyReport rep = report(family_state(0.05));
  CHECK(rep.product == doctest::Approx(0.093285769712047384).epsilon(1e-12));
  CHECK(rep.holds_exact);
  CHECK_FALSE(rep.holds_naive);
  CHECK_FALSE(rep.holds_strange);
}

TEST_CASE("bound properties across random states") {
  std::mt19937 rng(31415926);
  for (int trial = 0; trial < 300; ++trial) {
    const AngularState state = test_support::random_angular(rng);
    const UncertaintyReport rep = report(state);
    CHECK(rep.holds_exact);
    CHECK(rep.product >= rep.bound_exact - 1e-10);
    CHECK(std::abs(rep.bound_general - rep.bound_exact) < 1e-10);
    CHECK(rep.bound_tight >= rep.bound_general - 1e-12);
    CHECK(rep.product >= rep.bound_tight - 1e-10);
    CHECK(rep.delta_phi <= pi + 1e-12);
    CHECK(std::abs(rep.product - rep.delta_phi * rep.delta_lz) < 1e-14);
    CHECK(std::abs(rep.pi_delta_lz - pi * rep.delta_lz) < 1e-14);
  }
  for (int trial = 0; trial < 150; ++trial) {
    const LandauState state = test_support::random_landau(rng);
    const UncertaintyReport rep = report(state);
    CHECK(rep.holds_exact);
    CHECK(rep.product >= rep.bound_exact - 1e-10);
    CHECK(std::abs(rep.bound_general - rep.bound_exact) < 1e-10);
    CHECK(rep.bound_tight >= rep.bound_general - 1e-12);
    CHECK(rep.product >= rep.bound_tight - 1e-10);
    CHECK(rep.delta_phi <= pi + 1e-12);
  }
}
