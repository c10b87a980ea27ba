#pragma once

#include <complex>
#include <map>
#include <vector>

#include "azimuth/errors.hpp"

namespace azimuth {

using Complex = std::complex<double>;

/// One basis amplitude: the coefficient of e^{im phi}/sqrt(2 pi).
struct Coefficient {
  int m = 0;
  Complex c;
};

/// A state's coefficients must satisfy |sum |c_m|^2 - 1| < kNormTolerance.
inline constexpr double kNormTolerance = 1e-12;

/// Superposition of angular-momentum eigenstates on the circle,
///
///   psi(phi) = sum_m c_m e^{im phi} / sqrt(2 pi),   phi in [0, 2 pi),
///
/// with m on a finite integer window (absent m means c_m = 0).
/// Instances are immutable and always unit-normalized.
class AngularState {
 public:
  /// With renormalize = true (default) the input is scaled to unit norm;
  /// otherwise it must already be normalized to within kNormTolerance.
  /// Throws invalid_state_error if every amplitude vanishes.
  explicit AngularState(const std::map<int, Complex>& coefficients,
                        bool renormalize = true);

  const std::vector<Coefficient>& coefficients() const noexcept {
    return coeffs_;
  }
  /// c_m, zero outside the stored window.
  Complex coefficient(int m) const noexcept;
  int min_m() const noexcept { return coeffs_.front().m; }
  int max_m() const noexcept { return coeffs_.back().m; }

  /// Position representation psi(phi).
  Complex evaluate(double phi) const;

 private:
  std::vector<Coefficient> coeffs_;  // ascending in m, at least one entry
};

/// Lowest-Landau-level superposition in the symmetric gauge with the
/// magnetic length set to 1,
///
///   psi(r, phi) = sum_{m >= 0} c_m R_m(r) e^{im phi} / sqrt(2 pi),
///   R_m(r) = r^m e^{-r^2/4} / sqrt(2^m m!),   int_0^inf R_m^2 r dr = 1.
///
/// Only m >= 0 exists in the lowest level; negative labels are rejected.
class LandauState {
 public:
  explicit LandauState(const std::map<int, Complex>& coefficients,
                       bool renormalize = true);

  const std::vector<Coefficient>& coefficients() const noexcept {
    return coeffs_;
  }
  Complex coefficient(int m) const noexcept;
  int min_m() const noexcept { return coeffs_.front().m; }
  int max_m() const noexcept { return coeffs_.back().m; }

  /// Normalized radial factor R_m(r), r >= 0.
  static double radial_factor(int m, double r);

  /// Position representation psi(r, phi).
  Complex evaluate(double r, double phi) const;

 private:
  std::vector<Coefficient> coeffs_;
};

/// Radial overlap of two Landau radial factors,
///
///   S_mn = int_0^inf R_m(r) R_n(r) r dr = Gamma((m+n)/2 + 1) / sqrt(m! n!).
///
/// Symmetric, S_mm = 1, 0 < S_mn <= 1. Evaluated through exact integer
/// factorials for m + n < 20 and through log-Gamma beyond that to stay
/// clear of overflow. Throws std::domain_error for negative indices.
double radial_overlap(int m, int n);

}  // namespace azimuth
