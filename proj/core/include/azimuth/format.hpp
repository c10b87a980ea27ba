#pragma once

#include <cstdio>
#include <string>

namespace azimuth {

/// Shortest decimal form with the given number of significant digits.
/// All CSV and report output funnels through this so that identical
/// inputs stay byte-identical.
inline std::string format_significant(double value, int digits = 12) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return buffer;
}

}  // namespace azimuth
