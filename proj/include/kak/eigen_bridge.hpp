#pragma once

// Adapters around Eigen, which serves as the trusted dense kernel for
// eigendecompositions, SVD, inversion, Cholesky and the matrix exponential.
// All other code works with kak::Matrix and goes through these functions.

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <stdexcept>
#include <vector>

#include "matrix.hpp"

namespace kak {

inline Eigen::MatrixXd to_eigen(const Matrix<double>& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline Eigen::MatrixXcd to_eigen(const Matrix<cd>& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline Matrix<double> from_eigen(const Eigen::MatrixXd& m) {
  Matrix<double> out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

inline Matrix<cd> from_eigen(const Eigen::MatrixXcd& m) {
  Matrix<cd> out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

// Eigendecomposition of a real symmetric matrix; eigenvalues ascending,
// eigenvectors as columns.
inline void sym_eig(const Matrix<double>& a, std::vector<double>& vals, Matrix<double>& vecs) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(a));
  if (es.info() != Eigen::Success) throw std::runtime_error("symmetric eigensolver failed");
  vals.assign(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
  vecs = from_eigen(Eigen::MatrixXd(es.eigenvectors()));
}

// Eigendecomposition of a complex Hermitian matrix; eigenvalues ascending.
inline void herm_eig(const Matrix<cd>& a, std::vector<double>& vals, Matrix<cd>& vecs) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(a));
  if (es.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver failed");
  vals.assign(es.eigenvalues().data(), es.eigenvalues().data() + a.rows());
  vecs = from_eigen(Eigen::MatrixXcd(es.eigenvectors()));
}

// Full SVD a = U diag(sigma) V^H with sigma descending; V holds the right
// singular vectors as columns (not yet conjugate-transposed).
template <class T>
struct SvdResult {
  Matrix<T> U;
  std::vector<double> sigma;
  Matrix<T> V;
};

inline SvdResult<double> svd(const Matrix<double>& a) {
  if (a.rows() == 0 || a.cols() == 0)
    return {Matrix<double>::identity(a.rows()), {}, Matrix<double>::identity(a.cols())};
  Eigen::JacobiSVD<Eigen::MatrixXd> s(to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult<double> out;
  out.U = from_eigen(Eigen::MatrixXd(s.matrixU()));
  out.V = from_eigen(Eigen::MatrixXd(s.matrixV()));
  out.sigma.assign(s.singularValues().data(),
                   s.singularValues().data() + s.singularValues().size());
  return out;
}

inline SvdResult<cd> svd(const Matrix<cd>& a) {
  if (a.rows() == 0 || a.cols() == 0)
    return {Matrix<cd>::identity(a.rows()), {}, Matrix<cd>::identity(a.cols())};
  Eigen::JacobiSVD<Eigen::MatrixXcd> s(to_eigen(a), Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult<cd> out;
  out.U = from_eigen(Eigen::MatrixXcd(s.matrixU()));
  out.V = from_eigen(Eigen::MatrixXcd(s.matrixV()));
  out.sigma.assign(s.singularValues().data(),
                   s.singularValues().data() + s.singularValues().size());
  return out;
}

template <class T>
double smallest_singular_value(const Matrix<T>& a) {
  auto s = svd(a);
  return s.sigma.empty() ? 0.0 : s.sigma.back();
}

template <class T>
double largest_singular_value(const Matrix<T>& a) {
  auto s = svd(a);
  return s.sigma.empty() ? 0.0 : s.sigma.front();
}

// Eigenvalues of a general complex matrix, unordered.
inline std::vector<cd> eig_values(const Matrix<cd>& a) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_eigen(a), false);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
  std::vector<cd> out(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) out[static_cast<size_t>(i)] = es.eigenvalues()(i);
  return out;
}

inline Matrix<double> inverse(const Matrix<double>& a) {
  return from_eigen(Eigen::MatrixXd(to_eigen(a).partialPivLu().inverse()));
}

inline Matrix<cd> inverse(const Matrix<cd>& a) {
  return from_eigen(Eigen::MatrixXcd(to_eigen(a).partialPivLu().inverse()));
}

// Cholesky A = L L^T (resp. L L^H) of a positive definite matrix.
inline Matrix<double> llt(const Matrix<double>& a) {
  Eigen::LLT<Eigen::MatrixXd> f(to_eigen(a));
  if (f.info() != Eigen::Success) throw std::runtime_error("matrix is not positive definite");
  return from_eigen(Eigen::MatrixXd(f.matrixL()));
}

inline Matrix<cd> llt(const Matrix<cd>& a) {
  Eigen::LLT<Eigen::MatrixXcd> f(to_eigen(a));
  if (f.info() != Eigen::Success) throw std::runtime_error("matrix is not positive definite");
  return from_eigen(Eigen::MatrixXcd(f.matrixL()));
}

inline Matrix<double> expm_kernel(const Matrix<double>& a) {
  if (a.rows() == 0) return a;
  return from_eigen(Eigen::MatrixXd(to_eigen(a).exp()));
}

inline Matrix<cd> expm_kernel(const Matrix<cd>& a) {
  if (a.rows() == 0) return a;
  return from_eigen(Eigen::MatrixXcd(to_eigen(a).exp()));
}

}  // namespace kak
