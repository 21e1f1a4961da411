#pragma once

// The thirteen classical groups, organized as six templated families.  Each
// group knows its defining relation (a dual kind plus a form matrix), can
// score membership of a candidate matrix, and can sample Lie-algebra and
// group elements.

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include "eigen_bridge.hpp"
#include "expm.hpp"
#include "matrix.hpp"
#include "rng.hpp"
#include "scalar.hpp"
#include "structure.hpp"

namespace kak {

enum class GroupFamily {
  GeneralLinear,         // GL(n, F)
  Unitary,               // O(n), U(n), U(n, H)
  IndefiniteUnitary,     // O(p,q), U(p,q), U(p,q,H)
  ComplexOrthogonal,     // O(n, C)
  QuaternionOrthogonal,  // O_eta(n, H)
  Symplectic,            // Sp(2n, R), Sp(2n, C)
};

struct GroupId {
  GroupFamily family = GroupFamily::GeneralLinear;
  Field field = Field::R;
  int n = 0;          // size parameter; matrix dim is 2n for Symplectic
  int p = 0, q = 0;   // signature, IndefiniteUnitary only
  Unit eta = Unit::j; // QuaternionOrthogonal only

  int size() const {
    switch (family) {
      case GroupFamily::IndefiniteUnitary: return p + q;
      case GroupFamily::Symplectic: return 2 * n;
      default: return n;
    }
  }

  std::string name() const {
    std::ostringstream os;
    switch (family) {
      case GroupFamily::GeneralLinear:
        os << "GL(" << n << "," << field_name(field) << ")";
        break;
      case GroupFamily::Unitary:
        if (field == Field::R) os << "O(" << n << ")";
        else if (field == Field::C) os << "U(" << n << ")";
        else os << "U(" << n << ",H)";
        break;
      case GroupFamily::IndefiniteUnitary:
        if (field == Field::R) os << "O(" << p << "," << q << ")";
        else if (field == Field::C) os << "U(" << p << "," << q << ")";
        else os << "U(" << p << "," << q << ",H)";
        break;
      case GroupFamily::ComplexOrthogonal:
        os << "O(" << n << ",C)";
        break;
      case GroupFamily::QuaternionOrthogonal:
        os << "O_" << unit_name(eta) << "(" << n << ",H)";
        break;
      case GroupFamily::Symplectic:
        os << "Sp(" << 2 * n << "," << field_name(field) << ")";
        break;
    }
    return os.str();
  }
};

// Dual kind of the defining relation g^dual * form * g = form.
inline TransposeKind defining_dual(const GroupId& g) {
  switch (g.family) {
    case GroupFamily::GeneralLinear:
      throw std::logic_error("GL has no defining form");
    case GroupFamily::Unitary:
    case GroupFamily::IndefiniteUnitary:
      return g.field == Field::R   ? TransposeKind::T
             : g.field == Field::C ? TransposeKind::H
                                   : TransposeKind::D;
    case GroupFamily::ComplexOrthogonal:
      return TransposeKind::T;
    case GroupFamily::QuaternionOrthogonal:
      return g.eta == Unit::i   ? TransposeKind::Di
             : g.eta == Unit::j ? TransposeKind::Dj
                                : TransposeKind::Dk;
    case GroupFamily::Symplectic:
      return TransposeKind::T;
  }
  throw std::logic_error("unreachable");
}

template <class T>
Matrix<T> defining_form(const GroupId& g) {
  switch (g.family) {
    case GroupFamily::GeneralLinear:
      throw std::logic_error("GL has no defining form");
    case GroupFamily::IndefiniteUnitary:
      return mat_Ipq<T>(g.p, g.q);
    case GroupFamily::Symplectic:
      return mat_J<T>(g.n);
    default:
      return Matrix<T>::identity(g.n);
  }
}

namespace detail {
inline double smallest_sv(const Matrix<double>& m) { return smallest_singular_value(m); }
inline double smallest_sv(const Matrix<cd>& m) { return smallest_singular_value(m); }
inline double smallest_sv(const Matrix<Quaternion>& m) {
  return smallest_singular_value(complexify(m));
}
inline double largest_sv(const Matrix<double>& m) { return largest_singular_value(m); }
inline double largest_sv(const Matrix<cd>& m) { return largest_singular_value(m); }
inline double largest_sv(const Matrix<Quaternion>& m) {
  return largest_singular_value(complexify(m));
}
}  // namespace detail

// Frobenius norm of the defining-relation defect.  For GL the relation is
// bare invertibility: 0 when the matrix is safely invertible, +inf when it is
// numerically singular (so any threshold rejects it).
template <class T>
double membership_residual(const GroupId& g, const Matrix<T>& m) {
  if (field_of<T> != g.field) return std::numeric_limits<double>::infinity();
  if (m.rows() != g.size() || m.cols() != g.size())
    return std::numeric_limits<double>::infinity();
  if (g.family == GroupFamily::GeneralLinear) {
    const double lo = detail::smallest_sv(m), hi = detail::largest_sv(m);
    const double margin = hi > 0.0 ? lo / hi : 0.0;
    return margin > 1e3 * std::numeric_limits<double>::epsilon()
               ? 0.0
               : std::numeric_limits<double>::infinity();
  }
  const Matrix<T> phi = defining_form<T>(g);
  return diff_norm(m.conj_transpose(defining_dual(g)) * phi * m, phi);
}

// Defect of X against the linearized relation X^dual * form + form * X = 0.
template <class T>
double algebra_residual(const GroupId& g, const Matrix<T>& x) {
  if (g.family == GroupFamily::GeneralLinear) return 0.0;
  const Matrix<T> phi = defining_form<T>(g);
  return (x.conj_transpose(defining_dual(g)) * phi + phi * x).norm_fro();
}

// Gaussian samplers for the Lie algebras (projection of a Gaussian matrix
// onto the algebra); group elements are exponentials of algebra samples.
template <class T>
Matrix<T> sample_algebra(const GroupId& g, Rng& rng, double scale = 0.5) {
  if (field_of<T> != g.field) throw std::invalid_argument("scalar type does not match group field");
  switch (g.family) {
    case GroupFamily::GeneralLinear:
      return rng.gauss_matrix<T>(g.n, g.n, scale);
    case GroupFamily::Unitary:
    case GroupFamily::ComplexOrthogonal:
    case GroupFamily::QuaternionOrthogonal: {
      const Matrix<T> G = rng.gauss_matrix<T>(g.n, g.n, 0.5 * scale);
      return G - G.conj_transpose(defining_dual(g));
    }
    case GroupFamily::IndefiniteUnitary: {
      const TransposeKind k = defining_dual(g);
      const Matrix<T> ga = rng.gauss_matrix<T>(g.p, g.p, 0.5 * scale);
      const Matrix<T> gd = rng.gauss_matrix<T>(g.q, g.q, 0.5 * scale);
      const Matrix<T> b = rng.gauss_matrix<T>(g.p, g.q, scale);
      Matrix<T> x(g.p + g.q, g.p + g.q);
      x.set_block(0, 0, ga - ga.conj_transpose(k));
      x.set_block(0, g.p, b);
      x.set_block(g.p, 0, b.conj_transpose(k));
      x.set_block(g.p, g.p, gd - gd.conj_transpose(k));
      return x;
    }
    case GroupFamily::Symplectic: {
      const Matrix<T> a = rng.gauss_matrix<T>(g.n, g.n, scale);
      const Matrix<T> gb = rng.gauss_matrix<T>(g.n, g.n, 0.5 * scale);
      const Matrix<T> gc = rng.gauss_matrix<T>(g.n, g.n, 0.5 * scale);
      const Matrix<T> b = gb + gb.transpose();
      const Matrix<T> c = gc + gc.transpose();
      Matrix<T> x(2 * g.n, 2 * g.n);
      x.set_block(0, 0, a);
      x.set_block(0, g.n, b);
      x.set_block(g.n, 0, c);
      x.set_block(g.n, g.n, -a.transpose());
      return x;
    }
  }
  throw std::logic_error("unreachable");
}

template <class T>
Matrix<T> sample_group(const GroupId& g, Rng& rng, double scale = 0.5) {
  return expm(sample_algebra<T>(g, rng, scale));
}

}  // namespace kak
