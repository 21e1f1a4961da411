#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kak/eigen_bridge.hpp"
#include "kak/errors.hpp"
#include "kak/registry.hpp"

// Numerical factorization routes for the cells that admit one (F1, F4, F7,
// F9, F10, F13, F18), the folded one-sided variants (Takagi, Williamson,
// hyperbolic eigenproblem, nonsquare SVD, complex-symmetric Cholesky), the
// perplectic / conjugate-symplectic changes of basis with their structured
// SVDs, and the fold operation itself.

namespace kak {

enum class FoldSide { Left, Right };

enum class IsoDirection { Forward, Inverse };

// Conjugations identifying three classically named groups with groups from
// the catalog: real perplectic <-> O(ceil(n/2), floor(n/2)), complex
// perplectic <-> O(n, C), conjugate symplectic <-> U(n, n).
enum class IsoKind { RealPerplectic, ComplexPerplectic, ConjugateSymplectic };

namespace detail {

template <class T>
Matrix<T> adjoint(const Matrix<T>& m) {
  return m.conj_transpose(TransposeKind::H);
}

inline Matrix<cd> conj_entries(const Matrix<cd>& m) {
  Matrix<cd> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

template <class T>
void require_square(const Matrix<T>& g, const char* who) {
  if (g.rows() != g.cols())
    throw BadPartition(std::string(who) + " needs a square matrix, got " +
                       std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
}

// Reject inputs whose singular-value margin makes the inverse meaningless.
template <class T>
void require_invertible(const Matrix<T>& g) {
  std::vector<double> sig;
  if constexpr (field_of<T> == Field::H) {
    sig = svd(complexify(g)).sigma;
  } else {
    sig = svd(g).sigma;
  }
  if (sig.empty()) return;
  const double smax = sig.front(), smin = sig.back();
  if (smax == 0.0 || smin <= 1e3 * std::numeric_limits<double>::epsilon() * smax)
    throw SingularMatrix(smin, smax);
}

// Half-open ranges of consecutive near-equal values in `v`.
inline std::vector<std::pair<int, int>> cluster_ranges(const std::vector<double>& v,
                                                       double rel_tol) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(v.size());
  int b = 0;
  for (int i = 1; i <= n; ++i) {
    if (i == n ||
        std::abs(v[i] - v[i - 1]) > rel_tol * std::max({1.0, std::abs(v[i]), std::abs(v[i - 1])})) {
      out.emplace_back(b, i);
      b = i;
    }
  }
  return out;
}

inline Matrix<double> orthonormal_complement(const Matrix<double>& cols) {
  const int m = cols.rows(), k = cols.cols();
  if (k == 0) return Matrix<double>::identity(m);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(to_eigen(cols));
  const Eigen::MatrixXd q = qr.householderQ();
  return from_eigen(Eigen::MatrixXd(q.rightCols(m - k)));
}

inline Matrix<cd> orthonormal_complement(const Matrix<cd>& cols) {
  const int m = cols.rows(), k = cols.cols();
  if (k == 0) return Matrix<cd>::identity(m);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(to_eigen(cols));
  const Eigen::MatrixXcd q = qr.householderQ();
  return from_eigen(Eigen::MatrixXcd(q.rightCols(m - k)));
}

inline Matrix<double> sqrt_sym_psd(const Matrix<double>& a) {
  std::vector<double> vals;
  Matrix<double> vecs;
  sym_eig(a, vals, vecs);
  Matrix<double> out(a.rows(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) {
      double acc = 0.0;
      for (int l = 0; l < a.rows(); ++l)
        acc += vecs(i, l) * std::sqrt(std::max(vals[l], 0.0)) * vecs(j, l);
      out(i, j) = acc;
    }
  return out;
}

// Diagonalize a symmetric unitary matrix as P = Q diag(e^{i phi}) Q^T with Q
// real orthogonal: eigendecompose Re(P), then rotate each eigenvalue cluster
// (cos phi constant there, sin phi = +-) by the eigenvectors of the projected
// Im(P).  Phases are read back from Q^T P Q, so cluster mistakes only cost
// accuracy, not correctness of the reported phase.
inline void sym_unitary_diag(const Matrix<cd>& p, Matrix<double>& q_out,
                             std::vector<double>& phi, double cluster_tol = 1e-8) {
  const int n = p.rows();
  Matrix<double> re(n, n), im(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      re(i, j) = (p(i, j).real() + p(j, i).real()) / 2.0;
      im(i, j) = (p(i, j).imag() + p(j, i).imag()) / 2.0;
    }
  std::vector<double> vals;
  sym_eig(re, vals, q_out);
  for (auto [b, e] : cluster_ranges(vals, cluster_tol)) {
    const int m = e - b;
    if (m == 1) continue;
    const Matrix<double> qc = q_out.block(0, b, n, m);
    Matrix<double> proj = qc.conj_transpose(TransposeKind::T) * im * qc;
    std::vector<double> bvals;
    Matrix<double> bvecs;
    sym_eig(proj, bvals, bvecs);
    q_out.set_block(0, b, qc * bvecs);
  }
  const Matrix<cd> qc = lift<cd>(q_out);
  const Matrix<cd> d = qc.conj_transpose(TransposeKind::T) * p * qc;
  phi.resize(n);
  for (int l = 0; l < n; ++l) phi[l] = std::atan2(d(l, l).imag(), d(l, l).real());
}

// Orthogonal reduction of a real skew-symmetric matrix: columns of q_out come
// in planes (2t, 2t+1) with q^T s q = blockdiag([[0, s_t], [-s_t, 0]], 0),
// s_t > 0 descending; the kernel fills the trailing columns.
inline void skew_canonical(const Matrix<double>& s, Matrix<double>& q_out,
                           std::vector<double>& svals, double zero_tol = 1e-10) {
  const int m = s.rows();
  Matrix<cd> h(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) h(i, j) = cd(0.0, 1.0) * ((s(i, j) - s(j, i)) / 2.0);
  std::vector<double> vals;
  Matrix<cd> vecs;
  herm_eig(h, vals, vecs);
  double scale = 1.0;
  for (double v : vals) scale = std::max(scale, std::abs(v));
  q_out = Matrix<double>(m, m);
  svals.clear();
  int col = 0;
  for (int l = 0; l < m && vals[l] < -zero_tol * scale; ++l) {
    svals.push_back(-vals[l]);
    for (int i = 0; i < m; ++i) {
      q_out(i, col) = std::numbers::sqrt2 * vecs(i, l).real();
      q_out(i, col + 1) = std::numbers::sqrt2 * vecs(i, l).imag();
    }
    col += 2;
  }
  if (col < m) {
    const Matrix<double> rest = orthonormal_complement(q_out.block(0, 0, m, col));
    q_out.set_block(0, col, rest);
  }
}

template <class T>
void scale_col(Matrix<T>& m, int j, const T& s) {
  for (int i = 0; i < m.rows(); ++i) m(i, j) = m(i, j) * s;
}

template <class T>
void scale_row(Matrix<T>& m, int i, const T& s) {
  for (int j = 0; j < m.cols(); ++j) m(i, j) = s * m(i, j);
}

template <class T>
double row_norm(const Matrix<T>& m, int i) {
  double acc = 0.0;
  for (int j = 0; j < m.cols(); ++j) acc += ScalarTraits<T>::abs2(m(i, j));
  return std::sqrt(acc);
}

template <class T>
double col_norm(const Matrix<T>& m, int j) {
  double acc = 0.0;
  for (int i = 0; i < m.rows(); ++i) acc += ScalarTraits<T>::abs2(m(i, j));
  return std::sqrt(acc);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// F7: SVD as a group factorization of GL_beta(n).

template <class T>
FactoredElement<T> svd_factor(const Matrix<T>& g) {
  detail::require_square(g, "svd_factor");
  detail::require_invertible(g);
  FactoredElement<T> fe;
  if constexpr (field_of<T> != Field::H) {
    auto sv = svd(g);
    fe.k1 = sv.U;
    fe.k2 = detail::adjoint(sv.V);
    fe.theta.resize(sv.sigma.size());
    for (size_t l = 0; l < sv.sigma.size(); ++l) fe.theta[l] = std::log(sv.sigma[l]);
  } else {
    // Quaternion SVD through the complex form: singular values of
    // complexify(g) pair up, and the antilinear map v -> -J conj(v) swaps the
    // two right-singular vectors of a pair.  Choosing each cluster basis as
    // {v_t, -J conj(v_t)} makes the assembled right factor an exact
    // complexification, which decomplexify undoes.
    const int n = g.rows(), nn = 2 * n;
    const Matrix<cd> gc = complexify(g);
    auto sv = svd(gc);
    Matrix<cd> v2(nn, nn), u2(nn, nn);
    std::vector<double> sq(n);
    std::vector<std::vector<cd>> basis;
    const auto dot = [nn](const std::vector<cd>& a, const std::vector<cd>& b) {
      cd acc = 0.0;
      for (int i = 0; i < nn; ++i) acc += std::conj(a[i]) * b[i];
      return acc;
    };
    const auto norm = [nn](const std::vector<cd>& a) {
      double acc = 0.0;
      for (int i = 0; i < nn; ++i) acc += std::norm(a[i]);
      return std::sqrt(acc);
    };
    const auto project_off = [&](std::vector<cd>& w) {
      for (const auto& u : basis) {
        const cd c = dot(u, w);
        for (int i = 0; i < nn; ++i) w[i] -= c * u[i];
      }
    };
    int slot = 0;
    for (auto [b, e] : detail::cluster_ranges(sv.sigma, 1e-8)) {
      const int m = e - b;
      if (m % 2 != 0)
        throw std::runtime_error("quaternion singular values failed to pair at cluster of size " +
                                 std::to_string(m));
      const size_t mark = basis.size();
      for (int t = 0; t < m / 2; ++t) {
        // Most independent remaining column of the cluster.
        std::vector<cd> best;
        double best_norm = -1.0;
        for (int j = b; j < e; ++j) {
          std::vector<cd> cand(nn);
          for (int i = 0; i < nn; ++i) cand[i] = sv.V(i, j);
          project_off(cand);
          const double r = norm(cand);
          if (r > best_norm) {
            best_norm = r;
            best = std::move(cand);
          }
        }
        for (auto& x : best) x /= best_norm;
        std::vector<cd> partner(nn);
        for (int i = 0; i < n; ++i) {
          partner[i] = -std::conj(best[n + i]);
          partner[n + i] = std::conj(best[i]);
        }
        basis.push_back(best);
        project_off(partner);
        const double pn = norm(partner);
        for (auto& x : partner) x /= pn;
        basis.push_back(std::move(partner));
      }
      for (int t = 0; t < m / 2; ++t) {
        const auto& v = basis[mark + 2 * t];
        const auto& w = basis[mark + 2 * t + 1];
        const double s = (sv.sigma[b + 2 * t] + sv.sigma[b + 2 * t + 1]) / 2.0;
        sq[slot] = s;
        for (int i = 0; i < nn; ++i) {
          v2(i, slot) = v[i];
          v2(i, n + slot) = w[i];
          cd au = 0.0, aw = 0.0;
          for (int j = 0; j < nn; ++j) {
            au += gc(i, j) * v[j];
            aw += gc(i, j) * w[j];
          }
          u2(i, slot) = au / s;
          u2(i, n + slot) = aw / s;
        }
        ++slot;
      }
    }
    fe.k1 = decomplexify(u2);
    fe.k2 = decomplexify(v2).conj_transpose(TransposeKind::D);
    fe.theta.resize(n);
    for (int l = 0; l < n; ++l) fe.theta[l] = std::log(sq[l]);
  }
  return fe;
}

// ---------------------------------------------------------------------------
// F1 (beta = 2): U(n) = O(n) diag(e^{i theta}) O(n).

inline FactoredElement<cd> odo(const Matrix<cd>& u) {
  detail::require_square(u, "odo");
  const int n = u.rows();
  // U^T U = O2^T diag(e^{2 i theta}) O2 is symmetric unitary.
  const Matrix<cd> m = u.conj_transpose(TransposeKind::T) * u;
  Matrix<double> q;
  std::vector<double> phi;
  detail::sym_unitary_diag(m, q, phi);
  std::vector<double> theta(n);
  std::vector<int> idx(n);
  for (int l = 0; l < n; ++l) {
    theta[l] = (phi[l] < 0.0 ? phi[l] + 2.0 * std::numbers::pi : phi[l]) / 2.0;
    idx[l] = l;
  }
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return theta[a] > theta[b]; });
  FactoredElement<cd> fe;
  fe.theta.resize(n);
  Matrix<cd> o2(n, n);
  for (int l = 0; l < n; ++l) {
    fe.theta[l] = theta[idx[l]];
    for (int j = 0; j < n; ++j) o2(l, j) = q(j, idx[l]);
  }
  Matrix<cd> o1 = u * o2.conj_transpose(TransposeKind::T);
  for (int l = 0; l < n; ++l)
    detail::scale_col(o1, l, std::polar(1.0, -fe.theta[l]));
  fe.k1 = std::move(o1);
  fe.k2 = std::move(o2);
  return fe;
}

// ---------------------------------------------------------------------------
// F4: CS decomposition of a beta-unitary matrix against row blocks (p, q) and
// column blocks (r, s) with r >= p >= q >= s and p + q = r + s.

template <class T>
FactoredElement<T> csd(const Matrix<T>& g, int p, int q, int r, int s) {
  static_assert(field_of<T> != Field::H, "CS decomposition is provided over R and C");
  const int n = p + q;
  if (!(s >= 0 && q >= s && p >= q && r >= p) || r + s != n)
    throw BadPartition("csd needs r >= p >= q >= s >= 0 with p+q = r+s, got p=" +
                       std::to_string(p) + " q=" + std::to_string(q) + " r=" +
                       std::to_string(r) + " s=" + std::to_string(s));
  if (g.rows() != n || g.cols() != n)
    throw BadPartition("csd partition does not match the matrix size");

  const Matrix<T> g11 = g.block(0, 0, p, r), g12 = g.block(0, r, p, s);
  const Matrix<T> g21 = g.block(p, 0, q, r), g22 = g.block(p, r, q, s);

  // Anchor: SVD of the thin corner gives A1, B2 and sin(theta) descending.
  auto sv = svd(g12);
  const Matrix<T> a1 = sv.U;
  const Matrix<T> b2 = detail::adjoint(sv.V);
  std::vector<double> theta(s);
  for (int l = 0; l < s; ++l)
    theta[l] = std::asin(std::clamp(sv.sigma[l], 0.0, 1.0));

  // First p rows of B1 from A1^H G11 = diag(cos, 1) * B1-rows; each row has
  // norm cos(theta_l) (resp. 1), so normalizing sidesteps the division.
  const Matrix<T> x = detail::adjoint(a1) * g11;
  Matrix<T> b1(r, r);
  for (int l = 0; l < p; ++l) {
    const double nrm = detail::row_norm(x, l);
    for (int j = 0; j < r; ++j)
      b1(l, j) = nrm > 0.0 ? x(l, j) * ScalarTraits<T>::from_real(1.0 / nrm) : x(l, j);
  }

  // Last s columns of A2 from G22 B2^H = A2 [0; diag(cos)]; the remaining
  // q - s columns are any orthonormal completion (the matched B1 rows below
  // absorb the choice).
  Matrix<T> a2(q, q);
  if (s > 0) {
    const Matrix<T> y = g22 * detail::adjoint(b2);
    Matrix<T> known(q, s);
    for (int l = 0; l < s; ++l) {
      const double nrm = detail::col_norm(y, l);
      for (int i = 0; i < q; ++i)
        known(i, l) = nrm > 0.0 ? y(i, l) * ScalarTraits<T>::from_real(1.0 / nrm) : y(i, l);
    }
    a2.set_block(0, q - s, known);
    if (q > s) a2.set_block(0, 0, detail::orthonormal_complement(known));
  } else {
    a2 = Matrix<T>::identity(q);
  }

  // Rows p..r-1 of B1 mirror the identity part of the middle block column.
  if (r > p) {
    const Matrix<T> z = detail::adjoint(a2) * g21;
    for (int i = 0; i < r - p; ++i)
      for (int j = 0; j < r; ++j) b1(p + i, j) = z(i, j);
  }

  FactoredElement<T> fe;
  fe.k1 = block_diag(a1, a2);
  fe.k2 = block_diag(b1, b2);
  fe.theta = std::move(theta);
  return fe;
}

// ---------------------------------------------------------------------------
// F9: hyperbolic SVD G = O diag(e^theta) V with V in U_beta(p, q).

template <class T>
FactoredElement<T> hsvd(const Matrix<T>& g, int p, int q) {
  static_assert(field_of<T> != Field::H, "hyperbolic SVD is provided over R and C");
  const int n = p + q;
  if (p < 0 || q < 0 || g.rows() != n || g.cols() != n)
    throw BadPartition("hsvd partition (p, q) does not match the matrix size");
  detail::require_invertible(g);
  const Matrix<T> m = g * mat_Ipq<T>(p, q) * detail::adjoint(g);
  std::vector<double> vals;
  Matrix<T> vecs;
  if constexpr (field_of<T> == Field::R) {
    sym_eig(m, vals, vecs);
  } else {
    herm_eig(m, vals, vecs);
  }
  int neg = 0;
  while (neg < n && vals[neg] < 0.0) ++neg;
  if (n - neg != p) throw SignatureMismatch(p, n - neg);

  // Positive eigenvalues descending into slots [0, p), negative eigenvalues
  // by descending magnitude into slots [p, n).
  std::vector<int> order(n);
  for (int l = 0; l < p; ++l) order[l] = n - 1 - l;
  for (int l = 0; l < q; ++l) order[p + l] = l;
  FactoredElement<T> fe;
  fe.theta.resize(n);
  Matrix<T> o(n, n);
  std::vector<double> sigma(n);
  for (int l = 0; l < n; ++l) {
    sigma[l] = std::sqrt(std::abs(vals[order[l]]));
    fe.theta[l] = std::log(sigma[l]);
    for (int i = 0; i < n; ++i) o(i, l) = vecs(i, order[l]);
  }
  Matrix<T> v = detail::adjoint(o) * g;
  for (int l = 0; l < n; ++l)
    detail::scale_row(v, l, ScalarTraits<T>::from_real(1.0 / sigma[l]));
  fe.k1 = std::move(o);
  fe.k2 = std::move(v);
  return fe;
}

// ---------------------------------------------------------------------------
// F10 (beta = 1): symplectic SVD G = O diag(S, S) W with W in Sp(2n, R).

inline FactoredElement<double> sympl_svd(const Matrix<double>& g) {
  detail::require_square(g, "sympl_svd");
  if (g.rows() % 2 != 0) throw BadPartition("sympl_svd needs an even-size matrix");
  const int n = g.rows() / 2, nn = g.rows();
  detail::require_invertible(g);
  const Matrix<double> k = g * mat_J<double>(n) * g.conj_transpose(TransposeKind::T);
  // i K is Hermitian with eigenvalues -+ sigma^2; the eigenvector for
  // -sigma^2 is (o_l + i o_{n+l}) / sqrt(2) in terms of the columns of O.
  Matrix<cd> h(nn, nn);
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j) h(i, j) = cd(0.0, 1.0) * ((k(i, j) - k(j, i)) / 2.0);
  std::vector<double> vals;
  Matrix<cd> vecs;
  herm_eig(h, vals, vecs);
  FactoredElement<double> fe;
  fe.theta.resize(n);
  Matrix<double> o(nn, nn);
  std::vector<double> sigma(n);
  for (int l = 0; l < n; ++l) {
    if (vals[l] >= 0.0) throw SignatureMismatch(n, l);
    sigma[l] = std::sqrt(-vals[l]);
    fe.theta[l] = std::log(sigma[l]);
    for (int i = 0; i < nn; ++i) {
      o(i, l) = std::numbers::sqrt2 * vecs(i, l).real();
      o(i, n + l) = std::numbers::sqrt2 * vecs(i, l).imag();
    }
  }
  Matrix<double> s = o.conj_transpose(TransposeKind::T) * g;
  for (int l = 0; l < nn; ++l) detail::scale_row(s, l, 1.0 / sigma[l % n]);
  fe.k1 = std::move(o);
  fe.k2 = std::move(s);
  return fe;
}

// ---------------------------------------------------------------------------
// Takagi factorization A = U diag(lambda) U^T of a complex symmetric matrix,
// lambda = singular values of A descending.

struct TakagiResult {
  Matrix<cd> u;
  std::vector<double> lambda;
};

inline TakagiResult takagi(const Matrix<cd>& a, double cluster_tol = 1e-8) {
  detail::require_square(a, "takagi");
  const int n = a.rows();
  const double sym_res = diff_norm(a, a.conj_transpose(TransposeKind::T));
  if (sym_res > 1e-8 * std::max(1.0, a.norm_fro())) throw NotSymmetric(sym_res);
  Matrix<cd> as(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) as(i, j) = (a(i, j) + a(j, i)) / 2.0;

  // A = W S V^H gives P = V^T W unitary, commuting with S^2 and symmetric on
  // each singular-value cluster; P = Y Y^T per cluster completes A = U S U^T
  // with U = conj(V) Y.
  auto sv = svd(as);
  const Matrix<cd> pmat = sv.V.conj_transpose(TransposeKind::T) * sv.U;
  Matrix<cd> y = Matrix<cd>::zero(n, n);
  for (auto [b, e] : detail::cluster_ranges(sv.sigma, cluster_tol)) {
    const int m = e - b;
    Matrix<cd> pc(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) pc(i, j) = (pmat(b + i, b + j) + pmat(b + j, b + i)) / 2.0;
    Matrix<double> qc;
    std::vector<double> phi;
    detail::sym_unitary_diag(pc, qc, phi, cluster_tol);
    Matrix<cd> yc = lift<cd>(qc);
    for (int l = 0; l < m; ++l) detail::scale_col(yc, l, std::polar(1.0, phi[l] / 2.0));
    y.set_block(b, b, yc);
  }
  TakagiResult out;
  out.u = detail::conj_entries(sv.V) * y;
  out.lambda = std::move(sv.sigma);
  return out;
}

// ---------------------------------------------------------------------------
// F13 (beta = 2): GL(n, C) = U(n) diag(e^theta) O(n, C).

inline FactoredElement<cd> uso_factor(const Matrix<cd>& g) {
  detail::require_square(g, "uso_factor");
  detail::require_invertible(g);
  const int n = g.rows();
  // G G^T = U diag(sigma^2) U^T is complex symmetric.
  const auto tk = takagi(g * g.conj_transpose(TransposeKind::T));
  FactoredElement<cd> fe;
  fe.theta.resize(n);
  std::vector<double> sigma(n);
  for (int l = 0; l < n; ++l) {
    sigma[l] = std::sqrt(tk.lambda[l]);
    fe.theta[l] = std::log(sigma[l]);
  }
  Matrix<cd> o = detail::adjoint(tk.u) * g;
  for (int l = 0; l < n; ++l)
    detail::scale_row(o, l, cd(1.0 / sigma[l], 0.0));
  fe.k1 = tk.u;
  fe.k2 = std::move(o);
  return fe;
}

// ---------------------------------------------------------------------------
// F18: hyperbolic CS decomposition of U_beta(p, q), middle
// [[Ch, 0, Sh], [0, I, 0], [Sh, 0, Ch]] with pairs l <-> p + l.

template <class T>
FactoredElement<T> hcsd(const Matrix<T>& g, int p, int q) {
  static_assert(field_of<T> != Field::H, "hyperbolic CSD is provided over R and C");
  const int n = p + q;
  if (!(p >= q && q >= 0))
    throw BadPartition("hcsd needs p >= q >= 0, got p=" + std::to_string(p) +
                       " q=" + std::to_string(q));
  if (g.rows() != n || g.cols() != n)
    throw BadPartition("hcsd partition does not match the matrix size");
  const Matrix<T> g11 = g.block(0, 0, p, p), g21 = g.block(p, 0, q, p);
  const Matrix<T> g22 = g.block(p, p, q, q);

  // Anchor: sinh(theta) are the singular values of the lower-left block.
  auto sv = svd(g21);
  std::vector<double> theta(q), ch(q);
  for (int l = 0; l < q; ++l) {
    theta[l] = std::asinh(sv.sigma[l]);
    ch[l] = std::cosh(theta[l]);
  }
  const Matrix<T> uq = sv.U;
  const Matrix<T> upr = detail::adjoint(sv.V);

  // Right q-block: Ch^{-1} W^H G22; left p-block: G11 V H11^{-1}.  Both are
  // exactly unitary for group input since G22 G22^H = W Ch^2 W^H and
  // G11^H G11 = V H11^2 V^H follow from the defining relation.
  Matrix<T> uqr = detail::adjoint(uq) * g22;
  for (int l = 0; l < q; ++l)
    detail::scale_row(uqr, l, ScalarTraits<T>::from_real(1.0 / ch[l]));
  Matrix<T> up = g11 * sv.V;
  for (int l = 0; l < q; ++l)
    detail::scale_col(up, l, ScalarTraits<T>::from_real(1.0 / ch[l]));

  FactoredElement<T> fe;
  fe.k1 = block_diag(up, uq);
  fe.k2 = block_diag(upr, uqr);
  fe.theta = std::move(theta);
  return fe;
}

// ---------------------------------------------------------------------------
// Folded corollaries.

// Complex-symmetric Cholesky-like factorization A = L L^T without pivoting;
// pivots are principal square roots and may break down (unlike the Hermitian
// positive definite case, zero pivots occur for perfectly nice A).
inline Matrix<cd> chol_complex_symmetric(const Matrix<cd>& a, double pivot_tol = 1e-12) {
  detail::require_square(a, "chol_complex_symmetric");
  const int n = a.rows();
  const double sym_res = diff_norm(a, a.conj_transpose(TransposeKind::T));
  if (sym_res > 1e-8 * std::max(1.0, a.norm_fro())) throw NotSymmetric(sym_res);
  const double scale = std::max(1.0, a.norm_fro());
  Matrix<cd> l = Matrix<cd>::zero(n, n);
  for (int k = 0; k < n; ++k) {
    cd acc = (a(k, k) + a(k, k)) / 2.0;
    for (int j = 0; j < k; ++j) acc -= l(k, j) * l(k, j);
    const cd piv = std::sqrt(acc);
    if (std::abs(piv) <= pivot_tol * scale) throw PivotBreakdown(k, std::abs(piv));
    l(k, k) = piv;
    for (int i = k + 1; i < n; ++i) {
      cd s = (a(i, k) + a(k, i)) / 2.0;
      for (int j = 0; j < k; ++j) s -= l(i, j) * l(k, j);
      l(i, k) = s / piv;
    }
  }
  return l;
}

// Williamson normal form of a symmetric positive definite 2n x 2n matrix:
// S A S^T = diag(sigma, sigma) with S symplectic; sigma are the symplectic
// eigenvalues |eig(J A)|.
struct WilliamsonResult {
  Matrix<double> s;
  std::vector<double> sigma;
};

inline WilliamsonResult williamson(const Matrix<double>& a) {
  detail::require_square(a, "williamson");
  if (a.rows() % 2 != 0) throw BadPartition("williamson needs an even-size matrix");
  const int n = a.rows() / 2;
  const double sym_res = diff_norm(a, a.conj_transpose(TransposeKind::T));
  if (sym_res > 1e-8 * std::max(1.0, a.norm_fro())) throw NotSymmetric(sym_res);
  Matrix<double> l;
  try {
    l = llt(a);
  } catch (const std::runtime_error& e) {
    throw NotPositiveDefinite(e.what());
  }
  // A = G^T G with G = L^T; the symplectic SVD G = O diag(S, S) W turns the
  // congruence around: (-J W J) A (-J W J)^T = diag(S^2, S^2).
  const auto fe = sympl_svd(l.conj_transpose(TransposeKind::T));
  const Matrix<double> j = mat_J<double>(n);
  WilliamsonResult out;
  out.s = (j * fe.k2 * j).scaled(-1.0);
  out.sigma.resize(n);
  for (int i = 0; i < n; ++i) out.sigma[i] = std::exp(2.0 * fe.theta[i]);
  return out;
}

// Hyperbolic eigenproblem for Hermitian positive definite K: K X = I_pq X L
// columnwise, X^H K X diagonal, L = I_pq diag(sigma^2) with sigma from the
// hyperbolic SVD of the Cholesky factor.
template <class T>
struct HyperbolicEigenResult {
  Matrix<T> x;
  std::vector<double> lambda;
};

template <class T>
HyperbolicEigenResult<T> hyperbolic_eigen(const Matrix<T>& k, int p, int q) {
  const int n = p + q;
  if (k.rows() != n || k.cols() != n)
    throw BadPartition("hyperbolic_eigen partition does not match the matrix size");
  const double sym_res = diff_norm(k, detail::adjoint(k));
  if (sym_res > 1e-8 * std::max(1.0, k.norm_fro())) throw NotSymmetric(sym_res);
  Matrix<T> l;
  try {
    l = llt(k);
  } catch (const std::runtime_error& e) {
    throw NotPositiveDefinite(e.what());
  }
  const auto fe = hsvd(detail::adjoint(l), p, q);
  HyperbolicEigenResult<T> out;
  out.x = inverse(fe.k2);
  out.lambda.resize(n);
  for (int i = 0; i < n; ++i)
    out.lambda[i] = (i < p ? 1.0 : -1.0) * std::exp(2.0 * fe.theta[i]);
  return out;
}

// SVD of an arbitrary real rectangular matrix obtained by embedding it as the
// off-diagonal block of an indefinite-orthogonal element and running the
// hyperbolic CSD: X = U [diag(sh); 0] V^T (p >= q; the transpose otherwise).
struct NonsquareSvdResult {
  Matrix<double> u;
  std::vector<double> sh;
  Matrix<double> v;
};

inline NonsquareSvdResult nonsquare_svd(const Matrix<double>& x) {
  const int p = x.rows(), q = x.cols();
  if (p < q) {
    auto t = nonsquare_svd(x.conj_transpose(TransposeKind::T));
    return {t.v, std::move(t.sh), t.u};
  }
  const Matrix<double> xt = x.conj_transpose(TransposeKind::T);
  Matrix<double> ip = Matrix<double>::identity(p), iq = Matrix<double>::identity(q);
  Matrix<double> m(p + q, p + q);
  m.set_block(0, 0, detail::sqrt_sym_psd(ip + x * xt));
  m.set_block(0, p, x);
  m.set_block(p, 0, xt);
  m.set_block(p, p, detail::sqrt_sym_psd(iq + xt * x));
  const auto fe = hcsd(m, p, q);
  NonsquareSvdResult out;
  out.u = fe.k1.block(0, 0, p, p);
  out.sh.resize(q);
  for (int l = 0; l < q; ++l) out.sh[l] = std::sinh(fe.theta[l]);
  out.v = fe.k2.block(p, p, q, q).conj_transpose(TransposeKind::T);
  return out;
}

// ---------------------------------------------------------------------------
// Structure-preserving changes of basis and the structured SVDs they induce.

// Basis for the real perplectic group: V = (I_{m1,m2} + E_n)/sqrt(2) with the
// center entry set to 1 for odd n (the raw formula is not orthogonal there),
// satisfying E_n = V I_{m1,m2} V^T.
inline Matrix<double> perplectic_basis(int n) {
  const int m1 = (n + 1) / 2;
  Matrix<double> v(n, n);
  for (int i = 0; i < n; ++i) {
    if (2 * i + 1 == n) {
      v(i, i) = 1.0;
    } else {
      v(i, i) = (i < m1 ? 1.0 : -1.0) / std::numbers::sqrt2;
      v(i, n - 1 - i) = 1.0 / std::numbers::sqrt2;
    }
  }
  return v;
}

// Basis for the complex perplectic group: V = ((1+i)/2) I + ((1-i)/2) E_n,
// unitary with V^T V = E_n.
inline Matrix<cd> complex_perplectic_basis(int n) {
  Matrix<cd> v(n, n);
  for (int i = 0; i < n; ++i) {
    v(i, i) += cd(0.5, 0.5);
    v(i, n - 1 - i) += cd(0.5, -0.5);
  }
  return v;
}

// Basis for the conjugate symplectic group: V = (1/sqrt(2)) [[I, -iI], [-iI, I]],
// unitary with i J_n = V I_{n,n} V^H.
inline Matrix<cd> conj_symplectic_basis(int nn) {
  if (nn % 2 != 0) throw BadPartition("conjugate symplectic basis needs even size");
  const int n = nn / 2;
  Matrix<cd> v(nn, nn);
  const double r = 1.0 / std::numbers::sqrt2;
  for (int i = 0; i < n; ++i) {
    v(i, i) = v(n + i, n + i) = cd(r, 0.0);
    v(i, n + i) = v(n + i, i) = cd(0.0, -r);
  }
  return v;
}

namespace detail {

inline double perplectic_residual(const Matrix<double>& g) {
  const Matrix<double> e = mat_E<double>(g.rows());
  return diff_norm(g.conj_transpose(TransposeKind::T) * e * g, e);
}

inline double perplectic_residual(const Matrix<cd>& g) {
  const Matrix<cd> e = mat_E<cd>(g.rows());
  return diff_norm(g.conj_transpose(TransposeKind::T) * e * g, e);
}

inline double conj_symplectic_residual(const Matrix<cd>& g) {
  const Matrix<cd> j = mat_J<cd>(g.rows() / 2);
  return diff_norm(g.conj_transpose(TransposeKind::H) * j * g, j);
}

template <class T>
void require_membership(const char* group, double residual, const Matrix<T>& g) {
  if (residual > 1e-6 * std::max(1.0, g.norm_fro() * g.norm_fro()))
    throw NotInGroup(group, residual);
}

}  // namespace detail

// Conjugation by the stored basis: forward maps the catalog group onto the
// named group (m -> V m V^H), inverse undoes it.  RealPerplectic acts on real
// matrices; the other two kinds are complex.
inline Matrix<double> structure_isomorphism(IsoKind kind, const Matrix<double>& m,
                                            IsoDirection dir) {
  if (kind != IsoKind::RealPerplectic)
    throw std::invalid_argument("this isomorphism kind acts on complex matrices");
  detail::require_square(m, "structure_isomorphism");
  const Matrix<double> v = perplectic_basis(m.rows());
  const Matrix<double> vt = v.conj_transpose(TransposeKind::T);
  Matrix<double> out = dir == IsoDirection::Forward ? v * m * vt : vt * m * v;
  if (dir == IsoDirection::Forward)
    detail::require_membership("the real perplectic group", detail::perplectic_residual(out), out);
  else
    detail::require_membership(
        "O(p, q)",
        membership_residual(detail::indefinite(Field::R, (m.rows() + 1) / 2, m.rows() / 2), out),
        out);
  return out;
}

inline Matrix<cd> structure_isomorphism(IsoKind kind, const Matrix<cd>& m, IsoDirection dir) {
  detail::require_square(m, "structure_isomorphism");
  const int n = m.rows();
  Matrix<cd> v;
  switch (kind) {
    case IsoKind::RealPerplectic: v = lift<cd>(perplectic_basis(n)); break;
    case IsoKind::ComplexPerplectic: v = complex_perplectic_basis(n); break;
    case IsoKind::ConjugateSymplectic: v = conj_symplectic_basis(n); break;
  }
  const Matrix<cd> vh = v.conj_transpose(TransposeKind::H);
  Matrix<cd> out = dir == IsoDirection::Forward ? v * m * vh : vh * m * v;
  if (dir == IsoDirection::Forward) {
    if (kind == IsoKind::ConjugateSymplectic)
      detail::require_membership("the conjugate symplectic group",
                                 detail::conj_symplectic_residual(out), out);
    else
      detail::require_membership("the complex perplectic group",
                                 detail::perplectic_residual(out), out);
  } else {
    GroupId src = kind == IsoKind::ConjugateSymplectic
                      ? detail::indefinite(Field::C, n / 2, n / 2)
                  : kind == IsoKind::ComplexPerplectic
                      ? detail::complex_orth(n)
                      : detail::indefinite(Field::C, (n + 1) / 2, n / 2);
    detail::require_membership(src.name().c_str(), membership_residual(src, out), out);
  }
  return out;
}

template <class T>
struct StructuredSvd {
  Matrix<T> u;
  std::vector<double> sigma;
  Matrix<T> v;
};

// SVD of a real perplectic matrix with perplectic orthogonal factors and a
// palindromic diagonal (sigma_1..sigma_m, [1], 1/sigma_m..1/sigma_1): map to
// O(m1, m2), run the hyperbolic CSD, and rotate the hyperbolic middle into
// mirrored-diagonal form with the plane basis (e_l +- e_{m1+l})/sqrt(2).
inline StructuredSvd<double> perplectic_svd(const Matrix<double>& pm) {
  detail::require_square(pm, "perplectic_svd");
  const int n = pm.rows(), m1 = (n + 1) / 2, m2 = n / 2;
  detail::require_membership("the real perplectic group", detail::perplectic_residual(pm), pm);
  const Matrix<double> v = perplectic_basis(n);
  const auto fe = hcsd(v.conj_transpose(TransposeKind::T) * pm * v, m1, m2);
  Matrix<double> b(n, n);
  for (int l = 0; l < m2; ++l) {
    b(l, l) = b(m1 + l, l) = 1.0 / std::numbers::sqrt2;
    b(l, n - 1 - l) = 1.0 / std::numbers::sqrt2;
    b(m1 + l, n - 1 - l) = -1.0 / std::numbers::sqrt2;
  }
  if (n % 2 == 1) b(m2, m2) = 1.0;
  StructuredSvd<double> out;
  out.u = v * fe.k1 * b;
  out.v = b.conj_transpose(TransposeKind::T) * fe.k2 * v.conj_transpose(TransposeKind::T);
  out.sigma.assign(n, 1.0);
  for (int l = 0; l < m2; ++l) {
    out.sigma[l] = std::exp(fe.theta[l]);
    out.sigma[n - 1 - l] = std::exp(-fe.theta[l]);
  }
  return out;
}

// SVD of a complex perplectic matrix with perplectic unitary factors.  The
// inverse basis map lands in O(n, C); W^H W = O2^T B^2 O2 with O2 real
// orthogonal and B built from planes [[ch, i sh], [-i sh, ch]], so a
// symmetric/skew simultaneous reduction of W^H W recovers O2 and theta.
inline StructuredSvd<cd> perplectic_svd(const Matrix<cd>& pm) {
  detail::require_square(pm, "perplectic_svd");
  const int n = pm.rows(), m = n / 2;
  detail::require_membership("the complex perplectic group", detail::perplectic_residual(pm), pm);
  const Matrix<cd> v = complex_perplectic_basis(n);
  const Matrix<cd> w = v.conj_transpose(TransposeKind::H) * pm * v;
  const Matrix<cd> gram = w.conj_transpose(TransposeKind::H) * w;
  Matrix<double> re(n, n), im(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      re(i, j) = (gram(i, j).real() + gram(j, i).real()) / 2.0;
      im(i, j) = (gram(i, j).imag() - gram(j, i).imag()) / 2.0;
    }
  std::vector<double> vals;
  Matrix<double> q;
  sym_eig(re, vals, q);

  // Assemble columns cluster by cluster, largest cosh(2 theta) first; inside
  // a cluster the skew part fixes the planes and sinh(2 theta) descending.
  Matrix<double> cols(n, n);
  std::vector<double> theta;
  int at = 0;
  auto ranges = detail::cluster_ranges(vals, 1e-8);
  for (auto it = ranges.rbegin(); it != ranges.rend(); ++it) {
    const auto [b, e] = *it;
    const int msz = e - b;
    const Matrix<double> qc = q.block(0, b, n, msz);
    Matrix<double> qq;
    std::vector<double> svals;
    detail::skew_canonical(qc.conj_transpose(TransposeKind::T) * im * qc, qq, svals);
    cols.set_block(0, at, qc * qq);
    at += msz;
    for (double s : svals) theta.push_back(std::asinh(s) / 2.0);
  }
  theta.resize(m, 0.0);

  Matrix<cd> bmat = Matrix<cd>::identity(n);
  for (int l = 0; l < m; ++l) {
    bmat(2 * l, 2 * l) = bmat(2 * l + 1, 2 * l + 1) = std::cosh(theta[l]);
    bmat(2 * l, 2 * l + 1) = cd(0.0, std::sinh(theta[l]));
    bmat(2 * l + 1, 2 * l) = cd(0.0, -std::sinh(theta[l]));
  }
  Matrix<cd> binv = detail::conj_entries(bmat);  // inverse: flip sinh sign
  const Matrix<cd> o2 = lift<cd>(cols.conj_transpose(TransposeKind::T));
  const Matrix<cd> o1 = w * lift<cd>(cols) * binv;

  // Permute plane (2l, 2l+1) to mirrored slots (n-1-l, l); conjugating by the
  // basis turns the middle into the palindromic diagonal.
  Matrix<double> pi(n, n);
  for (int l = 0; l < m; ++l) {
    pi(n - 1 - l, 2 * l) = 1.0;
    pi(l, 2 * l + 1) = 1.0;
  }
  if (n % 2 == 1) pi(m, n - 1) = 1.0;
  const Matrix<cd> pic = lift<cd>(pi);
  StructuredSvd<cd> out;
  out.u = v * (o1 * pic.conj_transpose(TransposeKind::T)) * v.conj_transpose(TransposeKind::H);
  out.v = v * (pic * o2) * v.conj_transpose(TransposeKind::H);
  out.sigma.assign(n, 1.0);
  for (int l = 0; l < m; ++l) {
    out.sigma[l] = std::exp(theta[l]);
    out.sigma[n - 1 - l] = std::exp(-theta[l]);
  }
  return out;
}

// SVD of a conjugate symplectic matrix with conjugate symplectic unitary
// factors and Sigma = diag(sigma_1..sigma_n, 1/sigma_1..1/sigma_n): map to
// U(n, n), run the hyperbolic CSD, and diagonalize the middle with
// X = (1/sqrt(2)) [[I, iI], [I, -iI]], which satisfies X^H I_{n,n} X = i J.
inline StructuredSvd<cd> conj_symplectic_svd(const Matrix<cd>& s) {
  detail::require_square(s, "conj_symplectic_svd");
  if (s.rows() % 2 != 0) throw BadPartition("conj_symplectic_svd needs an even-size matrix");
  const int n = s.rows() / 2, nn = s.rows();
  detail::require_membership("the conjugate symplectic group",
                             detail::conj_symplectic_residual(s), s);
  const Matrix<cd> v = conj_symplectic_basis(nn);
  const auto fe = hcsd(v.conj_transpose(TransposeKind::H) * s * v, n, n);
  Matrix<cd> x(nn, nn);
  const double r = 1.0 / std::numbers::sqrt2;
  for (int i = 0; i < n; ++i) {
    x(i, i) = x(n + i, i) = cd(r, 0.0);
    x(i, n + i) = cd(0.0, r);
    x(n + i, n + i) = cd(0.0, -r);
  }
  StructuredSvd<cd> out;
  out.u = v * fe.k1 * x;
  out.v = x.conj_transpose(TransposeKind::H) * fe.k2 * v.conj_transpose(TransposeKind::H);
  out.sigma.resize(nn);
  for (int l = 0; l < n; ++l) {
    out.sigma[l] = std::exp(fe.theta[l]);
    out.sigma[n + l] = std::exp(-fe.theta[l]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Folding: one-sided symmetric-space form of a factored element.

template <class T>
struct FoldResult {
  Matrix<T> folded;      // g tau(g)^{-1} (right) or sigma(g)^{-1} g (left)
  Matrix<T> conjugator;  // k1 (right) or k2 (left)
  Matrix<T> middle;      // a(2 theta)
};

template <class T>
FoldResult<T> fold(const FactorizationSpec& sp, const FactoredElement<T>& fe, FoldSide side) {
  const Matrix<T> g = compose(sp, fe);
  std::vector<double> doubled(fe.theta);
  for (double& t : doubled) t *= 2.0;
  FoldResult<T> out;
  out.middle = middle_build<T>(sp.middle, doubled);
  if (side == FoldSide::Right) {
    out.folded = g * inverse(sp.tau.template group<T>(g));
    out.conjugator = fe.k1;
  } else {
    out.folded = inverse(sp.sigma.template group<T>(g)) * g;
    out.conjugator = fe.k2;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dispatcher over the catalog.

inline bool has_decomposition(const FactorizationId& id) {
  switch (id.family) {
    case 1: return id.beta == 2;
    case 4: return id.beta != 4;
    case 7: return true;
    case 9: return id.beta != 4;
    case 10: return id.beta == 1;
    case 13: return id.beta == 2;
    case 18: return id.beta != 4;
    default: return false;
  }
}

template <class T>
FactoredElement<T> decompose(const FactorizationSpec& sp, const Matrix<T>& g) {
  if (!has_decomposition(sp.id) || beta_field(sp.id.beta) != field_of<T>)
    throw UnsupportedDecomposition(cell_name(sp.id));
  const MiddleSpec& m = sp.middle;
  if constexpr (field_of<T> == Field::H) {
    if (sp.id.family == 7) return svd_factor(g);
  } else if constexpr (field_of<T> == Field::C) {
    switch (sp.id.family) {
      case 1: return odo(g);
      case 4: return csd(g, m.p, m.q, m.dim - m.s, m.s);
      case 7: return svd_factor(g);
      case 9: return hsvd(g, sp.k2.parts[0].p, sp.k2.parts[0].q);
      case 13: return uso_factor(g);
      case 18: return hcsd(g, m.p, m.q);
    }
  } else {
    switch (sp.id.family) {
      case 4: return csd(g, m.p, m.q, m.dim - m.s, m.s);
      case 7: return svd_factor(g);
      case 9: return hsvd(g, sp.k2.parts[0].p, sp.k2.parts[0].q);
      case 10: return sympl_svd(g);
      case 18: return hcsd(g, m.p, m.q);
    }
  }
  throw UnsupportedDecomposition(cell_name(sp.id));
}

}  // namespace kak
