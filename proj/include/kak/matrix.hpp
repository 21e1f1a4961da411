#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <vector>

#include "scalar.hpp"

namespace kak {

// The transpose taxonomy. Over R every kind is the plain transpose. Over C:
// T is the plain transpose; H, D and Di are the conjugate transpose; Dj and Dk
// collapse to the plain transpose (for complex c, -j conj(c) j = c). Over H:
// T is the plain (component-wise) transpose, H and D are the quaternion
// conjugate transpose, and D-eta is M -> -eta M^D eta.
enum class TransposeKind { T, H, D, Di, Dj, Dk };

inline const char* transpose_name(TransposeKind k) {
  switch (k) {
    case TransposeKind::T: return "T";
    case TransposeKind::H: return "H";
    case TransposeKind::D: return "D";
    case TransposeKind::Di: return "Di";
    case TransposeKind::Dj: return "Dj";
    case TransposeKind::Dk: return "Dk";
  }
  return "?";
}

inline double dual_entry(double v, TransposeKind) { return v; }

inline cd dual_entry(const cd& v, TransposeKind k) {
  switch (k) {
    case TransposeKind::T:
    case TransposeKind::Dj:
    case TransposeKind::Dk:
      return v;
    case TransposeKind::H:
    case TransposeKind::D:
    case TransposeKind::Di:
      return std::conj(v);
  }
  return v;
}

inline Quaternion dual_entry(const Quaternion& v, TransposeKind k) {
  switch (k) {
    case TransposeKind::T:
      return v;
    case TransposeKind::H:
    case TransposeKind::D:
      return qconj(v);
    case TransposeKind::Di:
    case TransposeKind::Dj:
    case TransposeKind::Dk: {
      const Quaternion eta = k == TransposeKind::Di   ? quat_i()
                             : k == TransposeKind::Dj ? quat_j()
                                                      : quat_k();
      return -(eta * qconj(v) * eta);
    }
  }
  return v;
}

template <class T>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c, T{}) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<T>::from_real(1.0);
    return m;
  }

  static Matrix zero(int r, int c) { return Matrix(r, c); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  bool square() const { return r_ == c_; }

  T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Matrix operator+(const Matrix& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] + o.a_[t];
    return out;
  }

  Matrix operator-(const Matrix& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = a_[t] - o.a_[t];
    return out;
  }

  Matrix operator-() const {
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = -a_[t];
    return out;
  }

  Matrix operator*(const Matrix& o) const {
    assert(c_ == o.r_);
    Matrix out(r_, o.c_);
    for (int i = 0; i < r_; ++i) {
      for (int k = 0; k < c_; ++k) {
        const T& aik = (*this)(i, k);
        if (ScalarTraits<T>::abs2(aik) == 0.0) continue;
        for (int j = 0; j < o.c_; ++j) out(i, j) += aik * o(k, j);
      }
    }
    return out;
  }

  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix out(m.r_, m.c_);
    for (size_t t = 0; t < m.a_.size(); ++t) out.a_[t] = s * m.a_[t];
    return out;
  }

  Matrix scaled(double s) const {
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = ScalarTraits<T>::from_real(s) * a_[t];
    return out;
  }

  Matrix transpose() const {
    Matrix out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  Matrix conj() const {
    Matrix out(r_, c_);
    for (size_t t = 0; t < a_.size(); ++t) out.a_[t] = ScalarTraits<T>::conj(a_[t]);
    return out;
  }

  Matrix conj_transpose(TransposeKind k) const {
    Matrix out(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) out(j, i) = dual_entry((*this)(i, j), k);
    return out;
  }

  Matrix block(int i0, int j0, int r, int c) const {
    assert(i0 >= 0 && j0 >= 0 && i0 + r <= r_ && j0 + c <= c_);
    Matrix out(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) out(i, j) = (*this)(i0 + i, j0 + j);
    return out;
  }

  void set_block(int i0, int j0, const Matrix& b) {
    assert(i0 >= 0 && j0 >= 0 && i0 + b.r_ <= r_ && j0 + b.c_ <= c_);
    for (int i = 0; i < b.r_; ++i)
      for (int j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  double norm_fro() const {
    double s = 0.0;
    for (const T& v : a_) s += ScalarTraits<T>::abs2(v);
    return std::sqrt(s);
  }

  double max_abs() const {
    double s = 0.0;
    for (const T& v : a_) s = std::max(s, ScalarTraits<T>::abs2(v));
    return std::sqrt(s);
  }

 private:
  int r_, c_;
  std::vector<T> a_;
};

using RMat = Matrix<double>;
using CMat = Matrix<cd>;
using HMat = Matrix<Quaternion>;

template <class T>
double diff_norm(const Matrix<T>& a, const Matrix<T>& b) {
  return (a - b).norm_fro();
}

// Lift every entry of a matrix into a larger field.
template <class To, class From>
Matrix<To> lift(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = scalar_lift<To>(m(i, j));
  return out;
}

// Residual of the claim that the matrix lies in the given subfield.
template <class T>
double subfield_residual(const Matrix<T>& m, Field sub);

template <>
inline double subfield_residual(const Matrix<double>&, Field) {
  return 0.0;
}

template <>
inline double subfield_residual(const Matrix<cd>& m, Field sub) {
  if (sub != Field::R) return 0.0;
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s += m(i, j).imag() * m(i, j).imag();
  return std::sqrt(s);
}

template <>
inline double subfield_residual(const Matrix<Quaternion>& m, Field sub) {
  if (sub == Field::H) return 0.0;
  double s = 0.0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Quaternion& v = m(i, j);
      s += qy(v) * qy(v) + qz(v) * qz(v);
      if (sub == Field::R) s += qx(v) * qx(v);
    }
  return std::sqrt(s);
}

template <class T>
Matrix<T> diag_from(const std::vector<double>& d) {
  Matrix<T> out(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i)
    out(static_cast<int>(i), static_cast<int>(i)) = ScalarTraits<T>::from_real(d[i]);
  return out;
}

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

}  // namespace kak
