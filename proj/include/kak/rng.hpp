#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "matrix.hpp"

namespace kak {

// Mixer used to derive independent per-task seeds from a base seed.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t base, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  uint64_t s = splitmix64(base ^ 0xA5A5A5A5A5A5A5A5ull);
  s = splitmix64(s ^ splitmix64(a + 1));
  s = splitmix64(s ^ splitmix64(b + 1));
  s = splitmix64(s ^ splitmix64(c + 1));
  return s;
}

// Deterministic random stream: mt19937_64 with an explicit Box-Muller normal
// so that sampled values do not depend on the standard library's unspecified
// normal_distribution implementation.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return (eng_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  double gauss() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  template <class T>
  T gauss_scalar();

  template <class T>
  Matrix<T> gauss_matrix(int r, int c, double scale = 1.0) {
    Matrix<T> out(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) out(i, j) = ScalarTraits<T>::from_real(scale) * gauss_scalar<T>();
    return out;
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

template <>
inline double Rng::gauss_scalar<double>() {
  return gauss();
}

template <>
inline cd Rng::gauss_scalar<cd>() {
  const double re = gauss();
  const double im = gauss();
  return cd(re, im);
}

template <>
inline Quaternion Rng::gauss_scalar<Quaternion>() {
  const double w = gauss();
  const double x = gauss();
  const double y = gauss();
  const double z = gauss();
  return Quaternion(w, x, y, z);
}

}  // namespace kak
