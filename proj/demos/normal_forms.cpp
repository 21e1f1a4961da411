// Two normal forms that fall out of the factorization machinery: the Takagi
// form of a complex symmetric matrix and the Williamson form of a symmetric
// positive-definite matrix.

#include <cstdio>

#include "kak/kak.hpp"

using namespace kak;

int main() {
  Rng rng(7);

  // Takagi: A = U diag(lambda) U^T with U unitary, lambda >= 0 descending.
  const int n = 4;
  const auto b = rng.gauss_matrix<cd>(n, n);
  const Matrix<cd> a = b + b.conj_transpose(TransposeKind::T);
  const auto tk = takagi(a);
  const auto sv = svd(a);
  std::printf("Takagi form of a random complex symmetric %dx%d matrix\n", n, n);
  std::printf("%-10s %-22s %-22s\n", "index", "takagi lambda", "singular value");
  for (int l = 0; l < n; ++l) std::printf("%-10d %-22.15f %-22.15f\n", l, tk.lambda[l], sv.sigma[l]);
  const double recon =
      diff_norm(tk.u * diag_from<cd>(tk.lambda) * tk.u.conj_transpose(TransposeKind::T), a);
  std::printf("|U L U^T - A| = %.3e,  |U^H U - I| = %.3e\n\n", recon,
              diff_norm(tk.u.conj_transpose(TransposeKind::H) * tk.u, Matrix<cd>::identity(n)));

  // Williamson: S A S^T = diag(Sigma, Sigma) with S symplectic.
  const int m = 3;
  const auto c = rng.gauss_matrix<double>(2 * m, 2 * m);
  const Matrix<double> spd =
      c * c.conj_transpose(TransposeKind::T) + Matrix<double>::identity(2 * m).scaled(0.25);
  const auto w = williamson(spd);
  std::printf("Williamson form of a random SPD %dx%d matrix\n", 2 * m, 2 * m);
  std::printf("symplectic eigenvalues:");
  for (double s : w.sigma) std::printf(" %.15f", s);
  Matrix<double> d(2 * m, 2 * m);
  for (int i = 0; i < m; ++i) d(i, i) = d(m + i, m + i) = w.sigma[i];
  const GroupId sp2m{GroupFamily::Symplectic, Field::R, m, 0, 0, Unit::j};
  std::printf("\n|S A S^T - diag(Sigma,Sigma)| = %.3e,  Sp(%d,R) membership = %.3e\n",
              diff_norm(w.s * spd * w.s.conj_transpose(TransposeKind::T), d), 2 * m,
              membership_residual(sp2m, w.s));
  return 0;
}
