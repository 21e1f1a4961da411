#pragma once

// Angle vectors parameterizing the abelian middle factor: their admissible
// domains, sampling, canonical ordering, and comparison.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "rng.hpp"

namespace kak {

enum class AngleDomain {
  ZeroPi,         // rotation-pair phases, theta in [0, pi)
  ZeroHalfPi,     // CS-type angles, theta in [0, pi/2]
  RealCanonical,  // hyperbolic / logarithmic parameters, any real
};

inline const char* domain_name(AngleDomain d) {
  switch (d) {
    case AngleDomain::ZeroPi: return "[0,pi)";
    case AngleDomain::ZeroHalfPi: return "[0,pi/2]";
    case AngleDomain::RealCanonical: return "real";
  }
  return "?";
}

// Draw angles from the interior of the domain.  Hyperbolic parameters are
// kept moderate so that cosh/sinh stay within a comfortable dynamic range.
inline std::vector<double> sample_angles(Rng& rng, int count, AngleDomain domain) {
  std::vector<double> out(static_cast<size_t>(count));
  for (double& t : out) {
    switch (domain) {
      case AngleDomain::ZeroPi: t = rng.uniform(0.0, std::numbers::pi); break;
      case AngleDomain::ZeroHalfPi: t = rng.uniform(0.0, std::numbers::pi / 2.0); break;
      case AngleDomain::RealCanonical: t = rng.uniform(0.0, 1.5); break;
    }
  }
  return out;
}

// Canonical order: descending within each contiguous block.  `split` gives
// the block lengths (empty means one block covering everything); middles that
// stack two independently ordered angle groups pass their lengths here.
inline std::vector<double> canonicalize_angles(std::vector<double> angles,
                                               const std::vector<int>& split = {}) {
  if (split.empty()) {
    std::sort(angles.begin(), angles.end(), std::greater<double>());
    return angles;
  }
  size_t at = 0;
  for (int len : split) {
    const size_t hi = std::min(angles.size(), at + static_cast<size_t>(len));
    std::sort(angles.begin() + static_cast<long>(at), angles.begin() + static_cast<long>(hi),
              std::greater<double>());
    at = hi;
  }
  return angles;
}

// Count entries lying outside the admissible domain by more than `tol`.
inline int domain_violations(const std::vector<double>& angles, AngleDomain domain,
                             double tol = 1e-12) {
  int bad = 0;
  for (double t : angles) {
    switch (domain) {
      case AngleDomain::ZeroPi:
        if (t < -tol || t >= std::numbers::pi + tol) ++bad;
        break;
      case AngleDomain::ZeroHalfPi:
        if (t < -tol || t > std::numbers::pi / 2.0 + tol) ++bad;
        break;
      case AngleDomain::RealCanonical:
        break;
    }
  }
  return bad;
}

// Max deviation between two angle vectors after canonical reordering.
inline double angle_distance(std::vector<double> a, std::vector<double> b,
                             const std::vector<int>& split = {}) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  a = canonicalize_angles(std::move(a), split);
  b = canonicalize_angles(std::move(b), split);
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace kak
