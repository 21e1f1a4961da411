#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "quaternion.hpp"

namespace kak {

using cd = std::complex<double>;

// The three coefficient fields the library works over.
enum class Field { R, C, H };

inline const char* field_name(Field f) {
  switch (f) {
    case Field::R: return "R";
    case Field::C: return "C";
    case Field::H: return "H";
  }
  return "?";
}

// Imaginary units. Over C only `i` is meaningful; over H all three are.
enum class Unit { i, j, k };

inline const char* unit_name(Unit u) {
  switch (u) {
    case Unit::i: return "i";
    case Unit::j: return "j";
    case Unit::k: return "k";
  }
  return "?";
}

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Field field = Field::R;
  static double conj(double v) { return v; }
  static double abs2(double v) { return v * v; }
  static double real(double v) { return v; }
  static double from_real(double v) { return v; }
};

template <>
struct ScalarTraits<cd> {
  static constexpr Field field = Field::C;
  static cd conj(const cd& v) { return std::conj(v); }
  static double abs2(const cd& v) { return std::norm(v); }
  static double real(const cd& v) { return v.real(); }
  static cd from_real(double v) { return cd(v, 0.0); }
};

template <>
struct ScalarTraits<Quaternion> {
  static constexpr Field field = Field::H;
  static Quaternion conj(const Quaternion& v) { return qconj(v); }
  static double abs2(const Quaternion& v) { return qabs2(v); }
  static double real(const Quaternion& v) { return qw(v); }
  static Quaternion from_real(double v) { return Quaternion(v, 0, 0, 0); }
};

template <class T>
constexpr Field field_of = ScalarTraits<T>::field;

// The requested imaginary unit as a scalar of type T; throws when the unit
// does not exist in that field.
template <class T>
T unit_scalar(Unit u);

template <>
inline double unit_scalar<double>(Unit) {
  throw std::invalid_argument("field R has no imaginary unit");
}

template <>
inline cd unit_scalar<cd>(Unit u) {
  if (u == Unit::i) return cd(0.0, 1.0);
  throw std::invalid_argument(std::string("field C has no unit ") + unit_name(u));
}

template <>
inline Quaternion unit_scalar<Quaternion>(Unit u) {
  switch (u) {
    case Unit::i: return quat_i();
    case Unit::j: return quat_j();
    case Unit::k: return quat_k();
  }
  throw std::invalid_argument("bad unit");
}

// Lift a scalar into a (possibly) larger field: R -> C -> H.
template <class To>
inline To scalar_lift(double v) {
  return ScalarTraits<To>::from_real(v);
}

template <class To>
inline To scalar_lift(const cd& v);

template <>
inline cd scalar_lift<cd>(const cd& v) {
  return v;
}

template <>
inline Quaternion scalar_lift<Quaternion>(const cd& v) {
  return Quaternion(v.real(), v.imag(), 0, 0);
}

template <class To>
inline To scalar_lift(const Quaternion& v);

template <>
inline Quaternion scalar_lift<Quaternion>(const Quaternion& v) {
  return v;
}

}  // namespace kak
