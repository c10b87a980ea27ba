#include "azimuth/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace azimuth {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Coefficient> normalized_coefficients(
    const std::map<int, Complex>& input, bool renormalize, const char* who) {
  std::vector<Coefficient> out;
  out.reserve(input.size());
  double norm_sq = 0.0;
  for (const auto& [m, c] : input) {  // std::map iterates ascending in m
    out.push_back({m, c});
    norm_sq += std::norm(c);
  }
  if (out.empty() || norm_sq == 0.0) {
    throw invalid_state_error(std::string(who) +
                              ": every coefficient vanishes");
  }
  if (renormalize) {
    const double norm = std::sqrt(norm_sq);
    for (auto& entry : out) entry.c /= norm;
  } else if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw invalid_state_error(
        std::string(who) + ": coefficients have norm^2 = " +
        std::to_string(norm_sq) + " but renormalization is disabled");
  }
  return out;
}

Complex lookup(const std::vector<Coefficient>& coeffs, int m) {
  const auto it = std::lower_bound(
      coeffs.begin(), coeffs.end(), m,
      [](const Coefficient& entry, int key) { return entry.m < key; });
  if (it == coeffs.end() || it->m != m) return {};
  return it->c;
}

// n! exactly; n <= 22 stays exactly representable in a double.
double factorial(int n) {
  double value = 1.0;
  for (int k = 2; k <= n; ++k) value *= k;
  return value;
}

}  // namespace

AngularState::AngularState(const std::map<int, Complex>& coefficients,
                           bool renormalize)
    : coeffs_(normalized_coefficients(coefficients, renormalize,
                                      "AngularState")) {}

Complex AngularState::coefficient(int m) const noexcept {
  return lookup(coeffs_, m);
}

Complex AngularState::evaluate(double phi) const {
  Complex sum;
  for (const auto& [m, c] : coeffs_) sum += c * std::polar(1.0, m * phi);
  return sum / std::sqrt(kTwoPi);
}

LandauState::LandauState(const std::map<int, Complex>& coefficients,
                         bool renormalize) {
  for (const auto& [m, c] : coefficients) {
    if (m < 0) {
      throw invalid_state_error(
          "LandauState: m = " + std::to_string(m) +
          " does not exist in the lowest Landau level");
    }
  }
  coeffs_ = normalized_coefficients(coefficients, renormalize, "LandauState");
}

Complex LandauState::coefficient(int m) const noexcept {
  return lookup(coeffs_, m);
}

double LandauState::radial_factor(int m, double r) {
  if (m < 0) {
    throw std::domain_error("radial_factor: m must be non-negative");
  }
  if (r < 0.0) {
    throw std::domain_error("radial_factor: r must be non-negative");
  }
  if (r == 0.0) return m == 0 ? 1.0 : 0.0;
  // log form so large m cannot overflow r^m / sqrt(2^m m!)
  const double log_norm =
      0.5 * (m * std::numbers::ln2 + std::lgamma(m + 1.0));
  return std::exp(m * std::log(r) - 0.25 * r * r - log_norm);
}

Complex LandauState::evaluate(double r, double phi) const {
  Complex sum;
  for (const auto& [m, c] : coeffs_) {
    sum += c * radial_factor(m, r) * std::polar(1.0, m * phi);
  }
  return sum / std::sqrt(kTwoPi);
}

double radial_overlap(int m, int n) {
  if (m < 0 || n < 0) {
    throw std::domain_error("radial_overlap: indices must be non-negative");
  }
  const double half_sum = 0.5 * (m + n);
  if (m + n < 20) {
    return std::tgamma(half_sum + 1.0) /
           std::sqrt(factorial(m) * factorial(n));
  }
  return std::exp(std::lgamma(half_sum + 1.0) -
                  0.5 * (std::lgamma(m + 1.0) + std::lgamma(n + 1.0)));
}

}  // namespace azimuth
