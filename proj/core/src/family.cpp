#include "azimuth/family.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include "azimuth/format.hpp"

namespace azimuth {
namespace {

constexpr double kPiSqThird = std::numbers::pi * std::numbers::pi / 3.0;
constexpr double kRootWidth = 1e-10;

void require_parameter(double a) {
  if (!(std::abs(a) <= 1.0)) {
    throw std::domain_error("family: parameter a = " + std::to_string(a) +
                            " outside [-1, 1]");
  }
}

double quantity_value(SweepQuantity quantity, double a) {
  const FamilyClosedForms cf = closed_forms(a);
  return quantity == SweepQuantity::product
             ? cf.delta_phi * cf.r_of_a
             : std::numbers::pi * cf.r_of_a;
}

template <typename Fn>
double bisect(const Fn& g, double lo, double hi, double g_lo) {
  while (hi - lo >= kRootWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // double resolution exhausted
    const double g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if (std::signbit(g_mid) == std::signbit(g_lo)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

AngularState family_state(double a) {
  require_parameter(a);
  const double b = std::sqrt(1.0 - a * a);
  // a^2 + (1 - a^2) = 1 up to rounding, so no renormalization pass is needed
  return AngularState({{0, {a, 0.0}}, {1, {b, 0.0}}}, false);
}

FamilyClosedForms closed_forms(double a) {
  require_parameter(a);
  const double signed_term = a * std::sqrt(1.0 - a * a);
  FamilyClosedForms out;
  out.r_of_a = std::abs(signed_term);
  out.delta_lz = out.r_of_a;
  out.delta_phi = std::sqrt(kPiSqThird + 4.0 * signed_term);
  return out;
}

std::vector<FamilyPoint> sweep(double a_min, double a_max, int n_points) {
  if (!(a_min >= -1.0 && a_max <= 1.0 && a_min < a_max)) {
    throw std::domain_error("sweep: need -1 <= a_min < a_max <= 1");
  }
  if (n_points < 2) {
    throw std::domain_error("sweep: need at least 2 grid points");
  }
  std::vector<FamilyPoint> rows(n_points);
  const double step = (a_max - a_min) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) {
    const double a =
        i + 1 == n_points
            ? a_max
            : std::clamp(a_min + i * step, -1.0, 1.0);  // rounding guard
    const FamilyClosedForms cf = closed_forms(a);
    const MomentSet ms = moments(family_state(a));
    FamilyPoint& p = rows[i];
    p.a = a;
    p.delta_phi_closed = cf.delta_phi;
    p.delta_phi_engine = rms_deviation(ms, Observable::phi);
    p.delta_lz = rms_deviation(ms, Observable::lz);
    p.r_of_a = cf.r_of_a;
    p.product = p.delta_phi_engine * p.delta_lz;
    p.pi_delta_lz = std::numbers::pi * p.delta_lz;
  }
  return rows;
}

CrossingSet find_crossings(SweepQuantity quantity, double target,
                           int n_grid) {
  if (n_grid < 100) {
    throw std::domain_error("find_crossings: need at least 100 grid points");
  }
  CrossingSet out;
  out.target = target;
  out.bracket_width = 2.0 / (n_grid - 1);
  const auto g = [&](double a) { return quantity_value(quantity, a) - target; };

  double prev_a = -1.0;
  double prev_g = g(prev_a);
  if (prev_g == 0.0) out.roots.push_back(prev_a);
  for (int i = 1; i < n_grid; ++i) {
    const double a = i + 1 == n_grid
                         ? 1.0
                         : std::clamp(-1.0 + i * out.bracket_width, -1.0, 1.0);
    const double g_a = g(a);
    if (g_a == 0.0) {
      out.roots.push_back(a);
    } else if (prev_g != 0.0 && std::signbit(g_a) != std::signbit(prev_g)) {
      out.roots.push_back(bisect(g, prev_a, a, prev_g));
    }
    prev_a = a;
    prev_g = g_a;
  }
  return out;  // scan order keeps the roots ascending
}

void write_sweep_csv(std::ostream& os, const std::vector<FamilyPoint>& rows) {
  os << "a,delta_phi_closed,delta_phi_engine,delta_lz,r_of_a,product,"
        "pi_delta_lz\n";
  for (const FamilyPoint& p : rows) {
    os << format_significant(p.a) << ',' << format_significant(p.delta_phi_closed)
       << ',' << format_significant(p.delta_phi_engine) << ','
       << format_significant(p.delta_lz) << ',' << format_significant(p.r_of_a)
       << ',' << format_significant(p.product) << ','
       << format_significant(p.pi_delta_lz) << '\n';
  }
}

}  // namespace azimuth
