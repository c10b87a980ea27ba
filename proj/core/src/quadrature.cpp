#include "azimuth/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace azimuth {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct UnitRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Nodes are the roots of P_n, found by Newton iteration seeded with the
// Chebyshev estimate; weights are 2 / ((1 - x^2) P_n'(x)^2).
UnitRule compute_unit_rule(int n) {
  UnitRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iteration = 0; iteration < 100; ++iteration) {
      double below = 1.0;  // P_{k-1}
      double value = x;    // P_k
      for (int k = 2; k <= n; ++k) {
        const double next =
            ((2.0 * k - 1.0) * x * value - (k - 1.0) * below) / k;
        below = value;
        value = next;
      }
      derivative = n * (x * value - below) / (x * x - 1.0);
      const double step = value / derivative;
      x -= step;
      if (std::abs(step) < 1e-15) break;
    }
    // iteration walks down from +1; mirror each root into ascending order
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double weight = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.weights[i] = weight;
    rule.weights[n - 1 - i] = weight;
  }
  return rule;
}

const UnitRule& shared_unit_rule(int n) {
  static std::mutex mutex;
  static std::map<int, UnitRule> cache;
  const std::scoped_lock lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_unit_rule(n)).first;
  return it->second;
}

// One full oracle evaluation on a fixed grid: the MomentSet plus the raw
// cross inner products and the norm estimate used as a grid sanity check.
struct PassResult {
  MomentSet ms;
  Complex phi_lz;
  Complex lz_phi;
  double norm = 0.0;
};

PassResult angular_pass(const AngularState& state, int nodes) {
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, kTwoPi);
  const auto& coeffs = state.coefficients();
  const double inv_two_pi = 1.0 / kTwoPi;  // |1/sqrt(2 pi)|^2 per basis pair

  PassResult out;
  Complex phi_lz, lz_phi;
  for (int i = 0; i < nodes; ++i) {
    const double phi = rule.nodes[i];
    const double w = rule.weights[i];
    Complex psi, lz_psi, lz2_psi;
    for (const auto& [m, c] : coeffs) {
      const Complex mode = c * std::polar(1.0, m * phi);
      psi += mode;
      lz_psi += static_cast<double>(m) * mode;        // L_z e^{im phi} = m ...
      lz2_psi += static_cast<double>(m) * m * mode;   // applied analytically
    }
    const double density = std::norm(psi) * inv_two_pi;
    out.norm += w * density;
    out.ms.mean_phi += w * phi * density;
    out.ms.mean_phi_sq += w * phi * phi * density;
    out.ms.mean_lz += w * (std::conj(psi) * lz_psi).real() * inv_two_pi;
    out.ms.mean_lz_sq += w * (std::conj(psi) * lz2_psi).real() * inv_two_pi;
    phi_lz += w * phi * std::conj(psi) * lz_psi * inv_two_pi;
    lz_phi += w * std::conj(lz_psi) * (phi * psi) * inv_two_pi;
  }
  // |psi(2 pi)|^2 is a point value, not an integral; the series is summed
  // directly at the boundary, which still avoids the closed-form pair sum
  out.ms.boundary_density = std::norm(state.evaluate(kTwoPi));
  out.phi_lz = phi_lz;
  out.lz_phi = lz_phi;
  out.ms.cross_antisym = (lz_phi - phi_lz).imag();
  return out;
}

PassResult landau_pass(const LandauState& state, int angular_nodes,
                       int radial_nodes, double radial_cutoff) {
  const QuadratureRule angular = gauss_legendre(angular_nodes, 0.0, kTwoPi);
  const QuadratureRule radial =
      gauss_legendre(radial_nodes, 0.0, radial_cutoff);
  const auto& coeffs = state.coefficients();
  const int terms = static_cast<int>(coeffs.size());
  const double inv_two_pi = 1.0 / kTwoPi;

  // basis tables; the grid sums below still sample psi pointwise
  std::vector<double> radial_table(terms * radial_nodes);
  for (int t = 0; t < terms; ++t) {
    for (int i = 0; i < radial_nodes; ++i) {
      radial_table[t * radial_nodes + i] =
          LandauState::radial_factor(coeffs[t].m, radial.nodes[i]);
    }
  }
  std::vector<Complex> phase_table(terms * angular_nodes);
  for (int t = 0; t < terms; ++t) {
    for (int j = 0; j < angular_nodes; ++j) {
      phase_table[t * angular_nodes + j] =
          std::polar(1.0, coeffs[t].m * angular.nodes[j]);
    }
  }

  PassResult out;
  Complex phi_lz, lz_phi;
  for (int j = 0; j < angular_nodes; ++j) {
    const double phi = angular.nodes[j];
    const double w_phi = angular.weights[j];
    for (int i = 0; i < radial_nodes; ++i) {
      Complex psi, lz_psi, lz2_psi;
      for (int t = 0; t < terms; ++t) {
        const double m = coeffs[t].m;
        const Complex mode = coeffs[t].c * radial_table[t * radial_nodes + i] *
                             phase_table[t * angular_nodes + j];
        psi += mode;
        lz_psi += m * mode;
        lz2_psi += m * m * mode;
      }
      // measure r dr dphi
      const double w = w_phi * radial.weights[i] * radial.nodes[i];
      const double density = std::norm(psi) * inv_two_pi;
      out.norm += w * density;
      out.ms.mean_phi += w * phi * density;
      out.ms.mean_phi_sq += w * phi * phi * density;
      out.ms.mean_lz += w * (std::conj(psi) * lz_psi).real() * inv_two_pi;
      out.ms.mean_lz_sq += w * (std::conj(psi) * lz2_psi).real() * inv_two_pi;
      phi_lz += w * phi * std::conj(psi) * lz_psi * inv_two_pi;
      lz_phi += w * std::conj(lz_psi) * (phi * psi) * inv_two_pi;
    }
  }
  // rho(2 pi) = int |psi(r, 2 pi)|^2 r dr by the radial rule
  double boundary = 0.0;
  for (int i = 0; i < radial_nodes; ++i) {
    Complex psi;
    for (int t = 0; t < terms; ++t) {
      psi += coeffs[t].c * radial_table[t * radial_nodes + i] *
             std::polar(1.0, coeffs[t].m * kTwoPi);
    }
    boundary += radial.weights[i] * radial.nodes[i] * std::norm(psi);
  }
  out.ms.boundary_density = boundary * inv_two_pi;
  out.phi_lz = phi_lz;
  out.lz_phi = lz_phi;
  out.ms.cross_antisym = (lz_phi - phi_lz).imag();
  return out;
}

void require_norm(double norm, double abs_tol) {
  const double budget = std::max(1e-8, 100.0 * abs_tol);
  if (!(std::abs(norm - 1.0) < budget)) {
    throw convergence_error(
        "oracle: quadrature grid reproduces the norm as " +
        std::to_string(norm) + "; the rule cannot resolve this state");
  }
}

void require_stable(const MomentSet& coarse, const MomentSet& fine,
                    double abs_tol) {
  const struct {
    const char* name;
    double delta;
  } fields[] = {
      {"mean_phi", fine.mean_phi - coarse.mean_phi},
      {"mean_phi_sq", fine.mean_phi_sq - coarse.mean_phi_sq},
      {"mean_lz", fine.mean_lz - coarse.mean_lz},
      {"mean_lz_sq", fine.mean_lz_sq - coarse.mean_lz_sq},
      {"boundary_density", fine.boundary_density - coarse.boundary_density},
      {"cross_antisym", fine.cross_antisym - coarse.cross_antisym},
  };
  for (const auto& field : fields) {
    if (!(std::abs(field.delta) < abs_tol)) {
      throw convergence_error(
          std::string("oracle: ") + field.name + " moved by " +
          std::to_string(field.delta) +
          " under node doubling (budget " + std::to_string(abs_tol) + ")");
    }
  }
}

PassResult run_pass(const AngularState& state, const QuadratureSpec& spec,
                    bool doubled) {
  return angular_pass(state, (doubled ? 2 : 1) * spec.angular_nodes);
}
PassResult run_pass(const LandauState& state, const QuadratureSpec& spec,
                    bool doubled) {
  const int factor = doubled ? 2 : 1;
  return landau_pass(state, factor * spec.angular_nodes,
                     factor * spec.radial_nodes, spec.radial_cutoff);
}

template <typename State>
PassResult checked_pass(const State& state, const QuadratureSpec& spec) {
  validate(spec);
  PassResult coarse = run_pass(state, spec, false);
  require_norm(coarse.norm, spec.abs_tol);
  if (!spec.check_convergence) {
    validate(coarse.ms);
    return coarse;
  }
  PassResult fine = run_pass(state, spec, true);
  require_norm(fine.norm, spec.abs_tol);
  require_stable(coarse.ms, fine.ms, spec.abs_tol);
  validate(fine.ms);
  return fine;  // keep the better estimate
}

}  // namespace

void validate(const QuadratureSpec& spec) {
  if (spec.angular_nodes < 16) {
    throw std::domain_error("QuadratureSpec: angular_nodes must be >= 16");
  }
  if (spec.radial_nodes < 1) {
    throw std::domain_error("QuadratureSpec: radial_nodes must be positive");
  }
  if (!(spec.radial_cutoff > 0.0)) {
    throw std::domain_error("QuadratureSpec: radial_cutoff must be positive");
  }
  if (!(spec.abs_tol > 0.0)) {
    throw std::domain_error("QuadratureSpec: abs_tol must be positive");
  }
}

QuadratureRule gauss_legendre(int n, double lo, double hi) {
  if (n < 1) throw std::domain_error("gauss_legendre: need at least 1 node");
  if (!(lo < hi)) throw std::domain_error("gauss_legendre: empty interval");
  const UnitRule& unit = shared_unit_rule(n);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double mid = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = mid + half * unit.nodes[i];
    rule.weights[i] = half * unit.weights[i];
  }
  return rule;
}

Complex integrate_angular(const std::function<Complex(double)>& integrand,
                          const QuadratureSpec& spec) {
  validate(spec);
  const QuadratureRule rule = gauss_legendre(spec.angular_nodes, 0.0, kTwoPi);
  Complex sum;
  for (int i = 0; i < spec.angular_nodes; ++i) {
    const Complex sample = integrand(rule.nodes[i]);
    if (!std::isfinite(sample.real()) || !std::isfinite(sample.imag())) {
      throw numerical_error("integrate_angular: non-finite sample at phi = " +
                            std::to_string(rule.nodes[i]));
    }
    sum += rule.weights[i] * sample;
  }
  return sum;
}

double integrate_radial(const std::function<double(double)>& integrand,
                        const QuadratureSpec& spec) {
  validate(spec);
  const QuadratureRule rule =
      gauss_legendre(spec.radial_nodes, 0.0, spec.radial_cutoff);
  double sum = 0.0;
  for (int i = 0; i < spec.radial_nodes; ++i) {
    const double sample = integrand(rule.nodes[i]);
    if (!std::isfinite(sample)) {
      throw numerical_error("integrate_radial: non-finite sample at r = " +
                            std::to_string(rule.nodes[i]));
    }
    sum += rule.weights[i] * sample;
  }
  return sum;
}

MomentSet oracle_moments(const AngularState& state,
                         const QuadratureSpec& spec) {
  return checked_pass(state, spec).ms;
}
MomentSet oracle_moments(const LandauState& state,
                         const QuadratureSpec& spec) {
  return checked_pass(state, spec).ms;
}

CrossInnerProducts oracle_cross_products(const AngularState& state,
                                         const QuadratureSpec& spec) {
  const PassResult pass = checked_pass(state, spec);
  return {pass.phi_lz, pass.lz_phi};
}
CrossInnerProducts oracle_cross_products(const LandauState& state,
                                         const QuadratureSpec& spec) {
  const PassResult pass = checked_pass(state, spec);
  return {pass.phi_lz, pass.lz_phi};
}

}  // namespace azimuth
