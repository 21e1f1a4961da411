#pragma once

// The abelian middle factors a(theta).  Every factorization's middle is one
// of seventeen shapes; each shape knows how to build a(theta) directly
// (placing cos/sin/cosh/sinh entries, no matrix exponential) and how to
// produce the generator d/dtheta_l a(theta)|_0 for consistency checks.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "angles.hpp"
#include "matrix.hpp"
#include "scalar.hpp"
#include "structure.hpp"

namespace kak {

enum class MiddleKind {
  PhaseDiag,       // diag(exp(eta theta_l)), n angles
  RotDouble,       // paired rotations R(theta) (x) R(-theta) across halves
  PhaseDiagDouble, // diag(e^{i theta}, e^{i theta}), same phases both halves
  CsPair,          // cos/sin rotation between coords l and (p+q-s)+l
  CsCorner,        // [[C,0,etaS],[0,I,0],[etaS,0,C]], layout (q, p-q, q)
  CsKron,          // [[C(x)I2, S(x)J2],[S(x)J2, C(x)I2]] inside (p-q,2q,p-q,2q)
  ExpDiag,         // diag(e^theta)
  HypPair,         // [[Ch,0,Sh],[0,I,0],[Sh,0,Ch]], layout (q, p-q, q)
  ExpDiagDouble,   // diag(e^theta, e^theta)
  ExpDiagInvPair,  // diag(e^theta, e^-theta)
  HypBlocks,       // blkdiag of [[ch, eta sh],[-eta sh, ch]], odd n leads with 1
  CoshShPair,      // [[Ch, Sh],[Sh, Ch]] with full n x n diagonal blocks
  HypPairInvPair,  // diag(H_{p,q}(theta), H_{p,q}(-theta))
  CoshEtaSh,       // [[Ch, i Sh],[-i Sh, Ch]]
  HypSplit,        // P2^T diag(H^theta, H^gamma) P2 over split signatures
  HypInterleaved,  // hyperbolic pairs (l, 2p+l) and (p+l, 2p+q+l), angles +/-theta
  HypCorner,       // [[Ch,0,etaSh],[0,I,0],[-etaSh,0,Ch]], layout (q, p-q, q)
};

struct MiddleSpec {
  MiddleKind kind{};
  int dim = 0;  // ambient matrix size
  // Shape parameters; which are used depends on the kind.
  int n = 0, p = 0, q = 0, s = 0;
  int p1 = 0, q1 = 0, p2 = 0, q2 = 0;
  Unit eta = Unit::i;
  AngleDomain domain = AngleDomain::RealCanonical;
  int angle_count = 0;
  std::vector<int> angle_split;  // block lengths for canonical ordering
};

namespace detail {

// H_{r,s} written into `out` at diagonal offset `at`: layout (s, r-s, s),
// hyperbolic pair l <-> r+l.  Assumes out already holds identity.
template <class T>
void put_hyp(Matrix<T>& out, int at, int r, int s, const double* theta, double flip = 1.0) {
  for (int l = 0; l < s; ++l) {
    const double t = flip * theta[l];
    out(at + l, at + l) = ScalarTraits<T>::from_real(std::cosh(t));
    out(at + r + l, at + r + l) = ScalarTraits<T>::from_real(std::cosh(t));
    out(at + l, at + r + l) = ScalarTraits<T>::from_real(std::sinh(t));
    out(at + r + l, at + l) = ScalarTraits<T>::from_real(std::sinh(t));
  }
}

template <class T>
void put_hyp_generator(Matrix<T>& out, int at, int r, int l, double flip = 1.0) {
  out(at + l, at + r + l) = ScalarTraits<T>::from_real(flip);
  out(at + r + l, at + l) = ScalarTraits<T>::from_real(flip);
}

}  // namespace detail

template <class T>
Matrix<T> middle_build(const MiddleSpec& m, const std::vector<double>& theta) {
  if (static_cast<int>(theta.size()) != m.angle_count)
    throw std::invalid_argument("middle_build: wrong number of angles");
  Matrix<T> a = Matrix<T>::identity(m.dim);
  const auto re = [](double v) { return ScalarTraits<T>::from_real(v); };
  switch (m.kind) {
    case MiddleKind::PhaseDiag: {
      const T e = unit_scalar<T>(m.eta);
      for (int l = 0; l < m.n; ++l)
        a(l, l) = re(std::cos(theta[l])) + e * re(std::sin(theta[l]));
      break;
    }
    case MiddleKind::RotDouble: {
      for (int r = 0; r < m.n / 2; ++r) {
        const double c = std::cos(theta[r]), s = std::sin(theta[r]);
        const int u = 2 * r, v = m.n + 2 * r;
        a(u, u) = a(u + 1, u + 1) = re(c);
        a(u, u + 1) = re(s);
        a(u + 1, u) = re(-s);
        a(v, v) = a(v + 1, v + 1) = re(c);
        a(v, v + 1) = re(-s);
        a(v + 1, v) = re(s);
      }
      break;
    }
    case MiddleKind::PhaseDiagDouble: {
      const T e = unit_scalar<T>(Unit::i);
      for (int l = 0; l < m.n; ++l) {
        const T z = re(std::cos(theta[l])) + e * re(std::sin(theta[l]));
        a(l, l) = z;
        a(m.n + l, m.n + l) = z;
      }
      break;
    }
    case MiddleKind::CsPair: {
      const int off = m.p + m.q - m.s;
      for (int l = 0; l < m.s; ++l) {
        a(l, l) = a(off + l, off + l) = re(std::cos(theta[l]));
        a(l, off + l) = re(std::sin(theta[l]));
        a(off + l, l) = re(-std::sin(theta[l]));
      }
      break;
    }
    case MiddleKind::CsCorner: {
      const T e = unit_scalar<T>(m.eta);
      for (int l = 0; l < m.q; ++l) {
        a(l, l) = a(m.p + l, m.p + l) = re(std::cos(theta[l]));
        a(l, m.p + l) = e * re(std::sin(theta[l]));
        a(m.p + l, l) = e * re(std::sin(theta[l]));
      }
      break;
    }
    case MiddleKind::CsKron: {
      const int a0 = m.p - m.q, b0 = 2 * m.p;
      for (int l = 0; l < m.q; ++l) {
        const double c = std::cos(theta[l]), s = std::sin(theta[l]);
        const int u = a0 + 2 * l, v = b0 + 2 * l;
        a(u, u) = a(u + 1, u + 1) = a(v, v) = a(v + 1, v + 1) = re(c);
        a(u, v + 1) = re(s);
        a(u + 1, v) = re(-s);
        a(v, u + 1) = re(s);
        a(v + 1, u) = re(-s);
      }
      break;
    }
    case MiddleKind::ExpDiag:
      for (int l = 0; l < m.n; ++l) a(l, l) = re(std::exp(theta[l]));
      break;
    case MiddleKind::HypPair:
      detail::put_hyp(a, 0, m.p, m.q, theta.data());
      break;
    case MiddleKind::ExpDiagDouble:
      for (int l = 0; l < m.n; ++l) {
        a(l, l) = re(std::exp(theta[l]));
        a(m.n + l, m.n + l) = re(std::exp(theta[l]));
      }
      break;
    case MiddleKind::ExpDiagInvPair:
      for (int l = 0; l < m.n; ++l) {
        a(l, l) = re(std::exp(theta[l]));
        a(m.n + l, m.n + l) = re(std::exp(-theta[l]));
      }
      break;
    case MiddleKind::HypBlocks: {
      const T e = unit_scalar<T>(m.eta);
      const int off = m.n % 2;
      for (int l = 0; l < m.n / 2; ++l) {
        const int u = off + 2 * l;
        a(u, u) = a(u + 1, u + 1) = re(std::cosh(theta[l]));
        a(u, u + 1) = e * re(std::sinh(theta[l]));
        a(u + 1, u) = e * re(-std::sinh(theta[l]));
      }
      break;
    }
    case MiddleKind::CoshShPair:
      detail::put_hyp(a, 0, m.n, m.n, theta.data());
      break;
    case MiddleKind::HypPairInvPair: {
      const int n = m.p + m.q;
      detail::put_hyp(a, 0, m.p, m.q, theta.data());
      detail::put_hyp(a, n, m.p, m.q, theta.data(), -1.0);
      break;
    }
    case MiddleKind::CoshEtaSh: {
      const T e = unit_scalar<T>(Unit::i);
      for (int l = 0; l < m.n; ++l) {
        a(l, l) = a(m.n + l, m.n + l) = re(std::cosh(theta[l]));
        a(l, m.n + l) = e * re(std::sinh(theta[l]));
        a(m.n + l, l) = e * re(-std::sinh(theta[l]));
      }
      break;
    }
    case MiddleKind::HypSplit: {
      const int m1 = std::min(m.p1, m.q2), m2 = std::min(m.p2, m.q1);
      Matrix<T> inner = Matrix<T>::identity(m.dim);
      detail::put_hyp(inner, 0, std::max(m.p1, m.q2), m1, theta.data());
      detail::put_hyp(inner, m.p1 + m.q2, std::max(m.p2, m.q1), m2, theta.data() + m1);
      const Matrix<double> p2 = perm_P2(m.p1, m.q1, m.p2, m.q2);
      const Matrix<T> p2t = lift<T>(p2);
      a = p2t.transpose() * inner * p2t;
      break;
    }
    case MiddleKind::HypInterleaved: {
      // Coordinate l pairs with 2p+l (angle +theta) and p+l with 2p+q+l
      // (angle -theta); this flat commutes with both complex structures
      // J_p (+) J_q and the signature I_{2p,2q} up to sign, so both
      // involutions invert it.
      const int b1 = 0, b3 = m.p, b5 = 2 * m.p, b6 = 2 * m.p + m.q;
      for (int l = 0; l < m.q; ++l) {
        const double ch = std::cosh(theta[l]), sh = std::sinh(theta[l]);
        a(b1 + l, b1 + l) = a(b5 + l, b5 + l) = re(ch);
        a(b1 + l, b5 + l) = a(b5 + l, b1 + l) = re(sh);
        a(b3 + l, b3 + l) = a(b6 + l, b6 + l) = re(ch);
        a(b3 + l, b6 + l) = a(b6 + l, b3 + l) = re(-sh);
      }
      break;
    }
    case MiddleKind::HypCorner: {
      const T e = unit_scalar<T>(m.eta);
      for (int l = 0; l < m.q; ++l) {
        a(l, l) = a(m.p + l, m.p + l) = re(std::cosh(theta[l]));
        a(l, m.p + l) = e * re(std::sinh(theta[l]));
        a(m.p + l, l) = e * re(-std::sinh(theta[l]));
      }
      break;
    }
  }
  return a;
}

// Generator of angle l: X_l = d/dtheta_l middle_build(theta) at theta = 0.
template <class T>
Matrix<T> middle_generator(const MiddleSpec& m, int l) {
  if (l < 0 || l >= m.angle_count) throw std::invalid_argument("middle_generator: bad index");
  Matrix<T> x(m.dim, m.dim);
  const auto re = [](double v) { return ScalarTraits<T>::from_real(v); };
  switch (m.kind) {
    case MiddleKind::PhaseDiag:
      x(l, l) = unit_scalar<T>(m.eta);
      break;
    case MiddleKind::RotDouble: {
      const int u = 2 * l, v = m.n + 2 * l;
      x(u, u + 1) = re(1.0);
      x(u + 1, u) = re(-1.0);
      x(v, v + 1) = re(-1.0);
      x(v + 1, v) = re(1.0);
      break;
    }
    case MiddleKind::PhaseDiagDouble:
      x(l, l) = unit_scalar<T>(Unit::i);
      x(m.n + l, m.n + l) = unit_scalar<T>(Unit::i);
      break;
    case MiddleKind::CsPair: {
      const int off = m.p + m.q - m.s;
      x(l, off + l) = re(1.0);
      x(off + l, l) = re(-1.0);
      break;
    }
    case MiddleKind::CsCorner:
      x(l, m.p + l) = unit_scalar<T>(m.eta);
      x(m.p + l, l) = unit_scalar<T>(m.eta);
      break;
    case MiddleKind::CsKron: {
      const int u = m.p - m.q + 2 * l, v = 2 * m.p + 2 * l;
      x(u, v + 1) = re(1.0);
      x(u + 1, v) = re(-1.0);
      x(v, u + 1) = re(1.0);
      x(v + 1, u) = re(-1.0);
      break;
    }
    case MiddleKind::ExpDiag:
      x(l, l) = re(1.0);
      break;
    case MiddleKind::HypPair:
      detail::put_hyp_generator(x, 0, m.p, l);
      break;
    case MiddleKind::ExpDiagDouble:
      x(l, l) = re(1.0);
      x(m.n + l, m.n + l) = re(1.0);
      break;
    case MiddleKind::ExpDiagInvPair:
      x(l, l) = re(1.0);
      x(m.n + l, m.n + l) = re(-1.0);
      break;
    case MiddleKind::HypBlocks: {
      const int u = m.n % 2 + 2 * l;
      x(u, u + 1) = unit_scalar<T>(m.eta);
      x(u + 1, u) = -unit_scalar<T>(m.eta);
      break;
    }
    case MiddleKind::CoshShPair:
      detail::put_hyp_generator(x, 0, m.n, l);
      break;
    case MiddleKind::HypPairInvPair: {
      const int n = m.p + m.q;
      detail::put_hyp_generator(x, 0, m.p, l);
      detail::put_hyp_generator(x, n, m.p, l, -1.0);
      break;
    }
    case MiddleKind::CoshEtaSh:
      x(l, m.n + l) = unit_scalar<T>(Unit::i);
      x(m.n + l, l) = -unit_scalar<T>(Unit::i);
      break;
    case MiddleKind::HypSplit: {
      const int m1 = std::min(m.p1, m.q2);
      Matrix<T> inner(m.dim, m.dim);
      if (l < m1)
        detail::put_hyp_generator(inner, 0, std::max(m.p1, m.q2), l);
      else
        detail::put_hyp_generator(inner, m.p1 + m.q2, std::max(m.p2, m.q1), l - m1);
      const Matrix<T> p2t = lift<T>(perm_P2(m.p1, m.q1, m.p2, m.q2));
      x = p2t.transpose() * inner * p2t;
      break;
    }
    case MiddleKind::HypInterleaved: {
      const int b1 = 0, b3 = m.p, b5 = 2 * m.p, b6 = 2 * m.p + m.q;
      x(b1 + l, b5 + l) = x(b5 + l, b1 + l) = re(1.0);
      x(b3 + l, b6 + l) = x(b6 + l, b3 + l) = re(-1.0);
      break;
    }
    case MiddleKind::HypCorner:
      x(l, m.p + l) = unit_scalar<T>(m.eta);
      x(m.p + l, l) = -unit_scalar<T>(m.eta);
      break;
  }
  return x;
}

}  // namespace kak
