#pragma once

// Involutive automorphisms used to carve a factorization out of its ambient
// group.  Every sigma/tau in the catalog is a composition of at most five
// primitive pieces: entrywise conjugation, a dual (transpose) kind, a unit
// conjugation X -> -eta X eta, a similarity by a fixed real orthogonal
// matrix, and an overall sign.

#include <optional>
#include <stdexcept>

#include "matrix.hpp"
#include "scalar.hpp"
#include "structure.hpp"

namespace kak {

template <class T>
Matrix<T> unit_conjugate(const Matrix<T>& x, Unit u) {
  const T e = unit_scalar<T>(u);
  Matrix<T> out(x.rows(), x.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j) out(i, j) = -(e * x(i, j) * e);
  return out;
}

struct Involution {
  double sign = 1.0;
  bool conjugate = false;
  std::optional<TransposeKind> tk;
  std::optional<Unit> eta;
  std::optional<Matrix<double>> gamma;  // real with gamma^-1 = gamma^T

  // Action on the Lie algebra: X -> sign * G ( -eta (X~)^k eta ) G^T,
  // applied in the order conjugate, dual, unit, similarity, sign.
  template <class T>
  Matrix<T> algebra(const Matrix<T>& x) const {
    Matrix<T> y = x;
    if (conjugate) y = y.conj();
    if (tk) y = y.conj_transpose(*tk);
    if (eta) y = unit_conjugate(y, *eta);
    if (gamma) y = conj_by(*gamma, y);
    return sign == 1.0 ? y : -y;
  }

  // Group-level action.  A dual kind is an anti-automorphism, so it only
  // exponentiates to a group automorphism together with inversion, which in
  // turn forces sign -1 on the algebra; without a dual the sign must be +1.
  template <class T>
  Matrix<T> group(const Matrix<T>& g) const {
    Matrix<T> y = g;
    if (conjugate) y = y.conj();
    if (tk) {
      if (sign != -1.0) throw std::logic_error("dual kind requires algebra sign -1");
      y = inverse(y.conj_transpose(*tk));
    } else if (sign != 1.0) {
      throw std::logic_error("sign -1 without a dual kind does not exponentiate");
    }
    if (eta) y = unit_conjugate(y, *eta);
    if (gamma) y = conj_by(*gamma, y);
    return y;
  }

  static Involution neg_dual(TransposeKind k) {
    Involution v;
    v.sign = -1.0;
    v.tk = k;
    return v;
  }
  static Involution neg_dual_gamma(TransposeKind k, Matrix<double> g) {
    Involution v;
    v.sign = -1.0;
    v.tk = k;
    v.gamma = std::move(g);
    return v;
  }
  static Involution similarity(Matrix<double> g, bool bar = false) {
    Involution v;
    v.conjugate = bar;
    v.gamma = std::move(g);
    return v;
  }
  static Involution bar() {
    Involution v;
    v.conjugate = true;
    return v;
  }
  static Involution unit(Unit u) {
    Involution v;
    v.eta = u;
    return v;
  }
};

}  // namespace kak
