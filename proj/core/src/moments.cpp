#include "azimuth/moments.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <string>

namespace azimuth {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kImagResidueTol = 1e-12;

// Both state kinds share the pair-sum machinery; they differ only in the
// radial overlap attached to each (m, n) pair.
struct View {
  std::span<const Coefficient> coeffs;
  bool radial = false;
};

double overlap(const View& view, int m, int n) {
  return view.radial ? radial_overlap(m, n) : 1.0;
}

// I_k(j) = (1/2 pi) int_0^{2 pi} phi^k e^{i j phi} dphi for k = 1, 2:
//   I_1(0) = pi           I_1(j) = -i/j
//   I_2(0) = 4 pi^2 / 3   I_2(j) = 2/j^2 - 2 pi i / j
// (verified against Gauss-Legendre quadrature in the test suite).
Complex phase_moment_integral(int k, int j) {
  if (k == 1) {
    if (j == 0) return {kPi, 0.0};
    return {0.0, -1.0 / j};
  }
  if (j == 0) return {4.0 * kPi * kPi / 3.0, 0.0};
  const double jd = j;
  return {2.0 / (jd * jd), -kTwoPi / jd};
}

double real_checked(Complex value, const char* who) {
  if (!(std::abs(value.imag()) < kImagResidueTol)) {
    throw numerical_error(std::string(who) + ": imaginary residue " +
                          std::to_string(value.imag()) +
                          " on a quantity that must be real");
  }
  return value.real();
}

void require_power(int k, const char* who) {
  if (k != 1 && k != 2) {
    throw std::domain_error(std::string(who) + ": k must be 1 or 2, got " +
                            std::to_string(k));
  }
}

double lz_moment_impl(const View& view, int k) {
  require_power(k, "lz_moment");
  double sum = 0.0;
  for (const auto& [m, c] : view.coeffs) {
    sum += std::norm(c) * (k == 1 ? m : static_cast<double>(m) * m);
  }
  return sum;
}

double phi_moment_impl(const View& view, int k) {
  require_power(k, "phi_moment");
  Complex sum;
  for (const auto& [m, cm] : view.coeffs) {
    for (const auto& [n, cn] : view.coeffs) {
      sum += std::conj(cm) * cn * overlap(view, m, n) *
             phase_moment_integral(k, n - m);
    }
  }
  return real_checked(sum, "phi_moment");
}

double boundary_density_impl(const View& view) {
  double density;
  if (view.radial) {
    // rho(2 pi) = (1/2 pi) sum_{m,n} conj(c_m) c_n S_mn, using e^{i m 2 pi} = 1
    Complex sum;
    for (const auto& [m, cm] : view.coeffs) {
      for (const auto& [n, cn] : view.coeffs) {
        sum += std::conj(cm) * cn * overlap(view, m, n);
      }
    }
    density = real_checked(sum, "boundary_density") / kTwoPi;
  } else {
    Complex amplitude;
    for (const auto& [m, c] : view.coeffs) amplitude += c;
    density = std::norm(amplitude) / kTwoPi;
  }
  if (density < 0.0) {
    if (density < -kImagResidueTol) {
      throw numerical_error("boundary_density: negative density " +
                            std::to_string(density));
    }
    density = 0.0;
  }
  return density;
}

CrossInnerProducts cross_inner_products_impl(const View& view) {
  CrossInnerProducts out;
  for (const auto& [m, cm] : view.coeffs) {
    for (const auto& [n, cn] : view.coeffs) {
      const Complex base = std::conj(cm) * cn * overlap(view, m, n) *
                           phase_moment_integral(1, n - m);
      out.phi_lz += static_cast<double>(n) * base;  // L_z hits the ket
      out.lz_phi += static_cast<double>(m) * base;  // L_z hits the bra
    }
  }
  return out;
}

MomentSet moments_impl(const View& view) {
  MomentSet out;
  out.mean_phi = phi_moment_impl(view, 1);
  out.mean_phi_sq = phi_moment_impl(view, 2);
  out.mean_lz = lz_moment_impl(view, 1);
  out.mean_lz_sq = lz_moment_impl(view, 2);
  out.boundary_density = boundary_density_impl(view);
  const CrossInnerProducts cross = cross_inner_products_impl(view);
  out.cross_antisym = (cross.lz_phi - cross.phi_lz).imag();
  validate(out);
  return out;
}

View view_of(const AngularState& state) {
  return {state.coefficients(), false};
}
View view_of(const LandauState& state) {
  return {state.coefficients(), true};
}

}  // namespace

void validate(const MomentSet& moments) {
  if (!(moments.mean_phi >= -1e-9 && moments.mean_phi <= kTwoPi + 1e-9)) {
    throw numerical_error("MomentSet: <phi> = " +
                          std::to_string(moments.mean_phi) +
                          " outside [0, 2 pi]");
  }
  if (!(moments.boundary_density >= -kImagResidueTol)) {
    throw numerical_error("MomentSet: negative boundary density " +
                          std::to_string(moments.boundary_density));
  }
}

double lz_moment(const AngularState& state, int k) {
  return lz_moment_impl(view_of(state), k);
}
double lz_moment(const LandauState& state, int k) {
  return lz_moment_impl(view_of(state), k);
}

double phi_moment(const AngularState& state, int k) {
  return phi_moment_impl(view_of(state), k);
}
double phi_moment(const LandauState& state, int k) {
  return phi_moment_impl(view_of(state), k);
}

double boundary_density(const AngularState& state) {
  return boundary_density_impl(view_of(state));
}
double boundary_density(const LandauState& state) {
  return boundary_density_impl(view_of(state));
}

CrossInnerProducts cross_inner_products(const AngularState& state) {
  return cross_inner_products_impl(view_of(state));
}
CrossInnerProducts cross_inner_products(const LandauState& state) {
  return cross_inner_products_impl(view_of(state));
}

double cross_antisym(const AngularState& state) {
  const CrossInnerProducts cross = cross_inner_products(state);
  return std::abs(cross.lz_phi - cross.phi_lz);
}
double cross_antisym(const LandauState& state) {
  const CrossInnerProducts cross = cross_inner_products(state);
  return std::abs(cross.lz_phi - cross.phi_lz);
}

MomentSet moments(const AngularState& state) {
  return moments_impl(view_of(state));
}
MomentSet moments(const LandauState& state) {
  return moments_impl(view_of(state));
}

}  // namespace azimuth
