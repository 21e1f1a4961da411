#pragma once

// Matrix exponential over all three scalar fields.  Real and complex go
// straight to the dense kernel; quaternionic matrices are exponentiated
// through their complex image, which is exact because complexify is a ring
// homomorphism (exp of the image equals the image of exp).

#include <cmath>
#include <stdexcept>

#include "eigen_bridge.hpp"
#include "matrix.hpp"
#include "structure.hpp"

namespace kak {

inline Matrix<double> expm(const Matrix<double>& a) { return expm_kernel(a); }
inline Matrix<cd> expm(const Matrix<cd>& a) { return expm_kernel(a); }

inline Matrix<Quaternion> expm(const Matrix<Quaternion>& a) {
  const Matrix<cd> image = expm_kernel(complexify(a));
  double residual = 0.0;
  Matrix<Quaternion> out = decomplexify(image, &residual);
  // The image of exp must again carry the complexified structure; anything
  // beyond rounding noise would mean the kernel broke the homomorphism.
  const double scale = std::max(1.0, image.norm_fro());
  if (residual > 1e3 * std::numeric_limits<double>::epsilon() * scale * a.rows())
    throw std::runtime_error("expm: quaternionic structure lost in complex kernel");
  return out;
}

}  // namespace kak
