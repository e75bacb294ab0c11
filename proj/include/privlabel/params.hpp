#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace privlabel {

/// ceil(x) with a small tolerance so exact products like 4*log2(1024)
/// do not round up through floating noise.
inline std::size_t ceil_tolerant(double x) {
  if (x <= 0.0) return 0;
  return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

inline double log2_of(std::size_t n) { return n <= 1 ? 0.0 : std::log2(static_cast<double>(n)); }

/// Number of log2 applications needed to bring n down to <= 2.
inline std::size_t log_star(double n) {
  std::size_t it = 0;
  while (n > 2.0) {
    n = std::log2(n);
    ++it;
  }
  return it;
}

/// k = ceil(c * log2 n), clamped to >= 1.
inline std::size_t sample_count(double c, std::size_t n) { return std::max<std::size_t>(1, ceil_tolerant(c * log2_of(n))); }

/// Default Linial-Saks radius cap B = ceil(2 log2 n), at least 1.
inline std::size_t default_radius_cap(std::size_t n) { return std::max<std::size_t>(1, ceil_tolerant(2.0 * log2_of(n))); }

/// Floor of (2 + eps) * a, the H-partition degree threshold.
inline std::size_t hpartition_threshold(std::size_t a, double eps) {
  return static_cast<std::size_t>(std::floor((2.0 + eps) * static_cast<double>(a) + 1e-9));
}

/// Layer cap floor((2 / eps) * log2 n) + 1.
inline std::size_t hpartition_layer_cap(std::size_t n, double eps) {
  return static_cast<std::size_t>(std::floor(2.0 / eps * log2_of(n) + 1e-9)) + 1;
}

}  // namespace privlabel
