#pragma once

#include <map>
#include <random>

#include "azimuth/states.hpp"

namespace test_support {

// Random superpositions for the property suites. Seeds are fixed so a
// failing draw can be replayed; the windows (m in [-6, 6] angular,
// m in [0, 6] Landau) keep every state well inside the quadrature
// oracle's resolution and cutoff.
inline std::map<int, azimuth::Complex> random_coefficients(std::mt19937& rng,
                                                           int m_lo,
                                                           int m_hi) {
  std::uniform_int_distribution<int> m_dist(m_lo, m_hi);
  std::uniform_int_distribution<int> count_dist(1, 7);
  std::uniform_real_distribution<double> amp(-1.0, 1.0);
  std::map<int, azimuth::Complex> coeffs;
  const int count = count_dist(rng);
  for (int i = 0; i < count; ++i) {
    coeffs[m_dist(rng)] = azimuth::Complex{amp(rng), amp(rng)};
  }
  double norm_sq = 0.0;
  for (const auto& [m, c] : coeffs) norm_sq += std::norm(c);
  if (norm_sq < 1e-12) coeffs[m_lo] = azimuth::Complex{1.0, 0.0};
  return coeffs;
}

inline azimuth::AngularState random_angular(std::mt19937& rng) {
  return azimuth::AngularState(random_coefficients(rng, -6, 6));
}

inline azimuth::LandauState random_landau(std::mt19937& rng) {
  return azimuth::LandauState(random_coefficients(rng, 0, 6));
}

}  // namespace test_support
