#pragma once

// Field-change embeddings (realify: C -> R, complexify: H -> C), their
// inverses, structure residuals, the canonical J / I_pq / reversal / shuffle
// matrices, and the algebraic identities tying transposes to the embeddings.

#include <array>
#include <cassert>
#include <cmath>
#include <vector>

#include "eigen_bridge.hpp"
#include "matrix.hpp"

namespace kak {

// realify(C) = [[Re C, Im C], [-Im C, Re C]], size doubles.
inline Matrix<double> realify(const Matrix<cd>& m) {
  const int r = m.rows(), c = m.cols();
  Matrix<double> out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const cd v = m(i, j);
      out(i, j) = v.real();
      out(i, j + c) = v.imag();
      out(i + r, j) = -v.imag();
      out(i + r, j + c) = v.real();
    }
  return out;
}

// Inverse of realify by block averaging; *residual (if given) receives the
// Frobenius distance of the input from the realified pattern.
inline Matrix<cd> derealify(const Matrix<double>& m, double* residual = nullptr) {
  assert(m.rows() % 2 == 0 && m.cols() % 2 == 0);
  const int r = m.rows() / 2, c = m.cols() / 2;
  Matrix<cd> out(r, c);
  double res2 = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const double re = 0.5 * (m(i, j) + m(i + r, j + c));
      const double im = 0.5 * (m(i, j + c) - m(i + r, j));
      out(i, j) = cd(re, im);
      const double dre = m(i, j) - m(i + r, j + c);
      const double dim = m(i, j + c) + m(i + r, j);
      res2 += dre * dre + dim * dim;
    }
  if (residual) *residual = std::sqrt(res2);
  return out;
}

// complexify(Q) = [[A, B], [-conj B, conj A]] where Q = A + B j entrywise.
inline Matrix<cd> complexify(const Matrix<Quaternion>& m) {
  const int r = m.rows(), c = m.cols();
  Matrix<cd> out(2 * r, 2 * c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const cd a = q_apart(m(i, j));
      const cd b = q_bpart(m(i, j));
      out(i, j) = a;
      out(i, j + c) = b;
      out(i + r, j) = -std::conj(b);
      out(i + r, j + c) = std::conj(a);
    }
  return out;
}

inline Matrix<Quaternion> decomplexify(const Matrix<cd>& m, double* residual = nullptr) {
  assert(m.rows() % 2 == 0 && m.cols() % 2 == 0);
  const int r = m.rows() / 2, c = m.cols() / 2;
  Matrix<Quaternion> out(r, c);
  double res2 = 0.0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const cd a = 0.5 * (m(i, j) + std::conj(m(i + r, j + c)));
      const cd b = 0.5 * (m(i, j + c) - std::conj(m(i + r, j)));
      out(i, j) = quat_from_ab(a, b);
      const cd da = m(i, j) - std::conj(m(i + r, j + c));
      const cd db = m(i, j + c) + std::conj(m(i + r, j));
      res2 += std::norm(da) + std::norm(db);
    }
  if (residual) *residual = std::sqrt(res2);
  return out;
}

inline double realify_structure_residual(const Matrix<double>& m) {
  double res = 0.0;
  derealify(m, &res);
  return res;
}

inline double complexify_structure_residual(const Matrix<cd>& m) {
  double res = 0.0;
  decomplexify(m, &res);
  return res;
}

// J_n (size 2n): [[0, I], [-I, 0]].
template <class T>
Matrix<T> mat_J(int n) {
  Matrix<T> out(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    out(i, n + i) = ScalarTraits<T>::from_real(1.0);
    out(n + i, i) = ScalarTraits<T>::from_real(-1.0);
  }
  return out;
}

// I_{p,q} = diag(I_p, -I_q).
template <class T>
Matrix<T> mat_Ipq(int p, int q) {
  Matrix<T> out(p + q, p + q);
  for (int i = 0; i < p; ++i) out(i, i) = ScalarTraits<T>::from_real(1.0);
  for (int i = 0; i < q; ++i) out(p + i, p + i) = ScalarTraits<T>::from_real(-1.0);
  return out;
}

// Reversal (backward identity) E_n.
template <class T>
Matrix<T> mat_E(int n) {
  Matrix<T> out(n, n);
  for (int i = 0; i < n; ++i) out(i, n - 1 - i) = ScalarTraits<T>::from_real(1.0);
  return out;
}

// Shuffle with row blocks (p, p, q, q) and column blocks (p, q, p, q):
// identities at block positions (1,1), (2,3), (3,2), (4,4).
inline Matrix<double> perm_Ppq(int p, int q) {
  const int n = 2 * (p + q);
  Matrix<double> out(n, n);
  for (int i = 0; i < p; ++i) out(i, i) = 1.0;
  for (int i = 0; i < p; ++i) out(p + i, p + q + i) = 1.0;
  for (int i = 0; i < q; ++i) out(2 * p + i, p + i) = 1.0;
  for (int i = 0; i < q; ++i) out(2 * p + q + i, 2 * p + q + i) = 1.0;
  return out;
}

// Shuffle with row blocks (p1, q1, p2, q2) and column blocks (p1, p2, q1, q2):
// identities at (1,1), (2,3), (3,2), (4,4).
inline Matrix<double> perm_P1(int p1, int q1, int p2, int q2) {
  const int n = p1 + q1 + p2 + q2;
  Matrix<double> out(n, n);
  int r = 0;
  for (int i = 0; i < p1; ++i, ++r) out(r, i) = 1.0;
  for (int i = 0; i < q1; ++i, ++r) out(r, p1 + p2 + i) = 1.0;
  for (int i = 0; i < p2; ++i, ++r) out(r, p1 + i) = 1.0;
  for (int i = 0; i < q2; ++i, ++r) out(r, p1 + p2 + q1 + i) = 1.0;
  return out;
}

// Shuffle with row blocks (p1, q2, p2, q1) and column blocks (p1, p2, q1, q2):
// identities at (1,1), (2,4), (3,2), (4,3).
inline Matrix<double> perm_P2(int p1, int q1, int p2, int q2) {
  const int n = p1 + q1 + p2 + q2;
  Matrix<double> out(n, n);
  int r = 0;
  for (int i = 0; i < p1; ++i, ++r) out(r, i) = 1.0;
  for (int i = 0; i < q2; ++i, ++r) out(r, p1 + p2 + q1 + i) = 1.0;
  for (int i = 0; i < p2; ++i, ++r) out(r, p1 + i) = 1.0;
  for (int i = 0; i < q1; ++i, ++r) out(r, p1 + p2 + i) = 1.0;
  return out;
}

template <class T>
Matrix<T> conj_by(const Matrix<double>& gamma, const Matrix<T>& x) {
  const Matrix<T> g = lift<T>(gamma);
  return g * x * g.transpose();
}

// The six identities coupling the embeddings with the transpose taxonomy.
// Each residual is exactly zero in floating point: every identity is a
// rearrangement (permutation plus sign flips) of the same stored values.
struct StructureIdentityResiduals {
  // realify(C^H) = realify(C)^T
  double realify_h;
  // realify(C^T) = I_{n,n} realify(C)^T I_{n,n}
  double realify_t;
  // complexify(Q^D) = complexify(Q)^H
  double complexify_d;
  // complexify(Q^{D_j}) = complexify(Q)^T and = -J complexify(Q)^H J
  double complexify_dj;
  // -J realify(C) J = realify(C)
  double realify_j;
  // -J conj(complexify(Q)) J = complexify(Q)
  double complexify_j;

  double worst() const {
    double w = realify_h;
    w = std::max(w, realify_t);
    w = std::max(w, complexify_d);
    w = std::max(w, complexify_dj);
    w = std::max(w, realify_j);
    w = std::max(w, complexify_j);
    return w;
  }
};

inline StructureIdentityResiduals structure_identity_residuals(const Matrix<cd>& c,
                                                               const Matrix<Quaternion>& q) {
  assert(c.square() && q.square());
  StructureIdentityResiduals out{};
  const int n = c.rows();
  const Matrix<double> rc = realify(c);
  out.realify_h = diff_norm(realify(c.conj_transpose(TransposeKind::H)), rc.transpose());
  const Matrix<double> inn = mat_Ipq<double>(n, n);
  out.realify_t = diff_norm(realify(c.conj_transpose(TransposeKind::T)), inn * rc.transpose() * inn);
  const Matrix<cd> cq = complexify(q);
  out.complexify_d =
      diff_norm(complexify(q.conj_transpose(TransposeKind::D)), cq.conj_transpose(TransposeKind::H));
  const Matrix<cd> jq = mat_J<cd>(q.rows());
  const double dj1 =
      diff_norm(complexify(q.conj_transpose(TransposeKind::Dj)), cq.conj_transpose(TransposeKind::T));
  const double dj2 = diff_norm(complexify(q.conj_transpose(TransposeKind::Dj)),
                               -(jq * cq.conj_transpose(TransposeKind::H) * jq));
  out.complexify_dj = std::max(dj1, dj2);
  const Matrix<double> jr = mat_J<double>(n);
  out.realify_j = diff_norm(-(jr * rc * jr), rc);
  out.complexify_j = diff_norm(-(jq * cq.conj() * jq), cq);
  return out;
}

// Inverse of a quaternion matrix through its complex image.
inline Matrix<Quaternion> inverse(const Matrix<Quaternion>& a) {
  return decomplexify(inverse(complexify(a)));
}

}  // namespace kak
