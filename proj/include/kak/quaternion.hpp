#pragma once

#include <boost/math/quaternion.hpp>

#include <cmath>
#include <complex>
#include <ostream>

namespace kak {

// Scalar quaternion type. Arithmetic comes from boost; the helpers below add
// the component naming (w, x, y, z), the Cayley-Dickson split q = a + b*j with
// a, b complex, and the unit constants used throughout the library.
using Quaternion = boost::math::quaternion<double>;

inline double qw(const Quaternion& q) { return q.R_component_1(); }
inline double qx(const Quaternion& q) { return q.R_component_2(); }
inline double qy(const Quaternion& q) { return q.R_component_3(); }
inline double qz(const Quaternion& q) { return q.R_component_4(); }

inline Quaternion quat(double w, double x = 0.0, double y = 0.0, double z = 0.0) {
  return Quaternion(w, x, y, z);
}

inline Quaternion quat_one() { return Quaternion(1, 0, 0, 0); }
inline Quaternion quat_i() { return Quaternion(0, 1, 0, 0); }
inline Quaternion quat_j() { return Quaternion(0, 0, 1, 0); }
inline Quaternion quat_k() { return Quaternion(0, 0, 0, 1); }

inline Quaternion qconj(const Quaternion& q) { return boost::math::conj(q); }

// Squared Euclidean magnitude w^2 + x^2 + y^2 + z^2.
inline double qabs2(const Quaternion& q) {
  return qw(q) * qw(q) + qx(q) * qx(q) + qy(q) * qy(q) + qz(q) * qz(q);
}

inline double qabs(const Quaternion& q) { return std::sqrt(qabs2(q)); }

inline Quaternion qinv(const Quaternion& q) {
  const double n2 = qabs2(q);
  return Quaternion(qw(q) / n2, -qx(q) / n2, -qy(q) / n2, -qz(q) / n2);
}

// Cayley-Dickson split q = a + b*j with a = w + x i and b = y + z i.
inline std::complex<double> q_apart(const Quaternion& q) { return {qw(q), qx(q)}; }
inline std::complex<double> q_bpart(const Quaternion& q) { return {qy(q), qz(q)}; }

inline Quaternion quat_from_ab(const std::complex<double>& a, const std::complex<double>& b) {
  return Quaternion(a.real(), a.imag(), b.real(), b.imag());
}

}  // namespace kak
