// Folding and field-doubling.  Folding turns a two-sided factorization
// g = k1 a k2 into a one-sided similarity statement: g tau(g)^-1 is conjugate
// to a(2 theta) by k1 alone.  Field-doubling embeds U(n) into the 2n x 2n
// real matrices, landing in the intersection O(2n) and Sp(2n, R).

#include <cstdio>

#include "kak/kak.hpp"

using namespace kak;

int main() {
  // Fold a hyperbolic-CSD factored element of GL(5, R) relative to O(3, 2).
  CaseParams prm;
  prm.p = 3, prm.q = 2;
  const FactorizationSpec sp = make_spec(9, 1, prm);
  std::printf("cell %s\n\n", sp.label.c_str());

  Rng rng(99);
  const auto fe = sample_factored<double>(sp, rng);
  const Matrix<double> g = compose(sp, fe);
  for (FoldSide side : {FoldSide::Right, FoldSide::Left}) {
    const auto fr = fold(sp, fe, side);
    const char* name = side == FoldSide::Right ? "right" : "left";
    std::printf("%-5s fold: |folded - conj(a(2 theta))| = %.3e, |g|^2 = %.3e\n", name,
                fold_identity_residual(sp, fe, side), g.norm_fro() * g.norm_fro());
    std::printf("      folded matrix is %dx%d, middle a(2 theta) rebuilt from %zu angle(s)\n",
                fr.folded.rows(), fr.folded.cols(), fe.theta.size());
  }

  // Doubling: a unitary sample realifies into both O(2n) and Sp(2n, R).
  const int n = 3;
  const GroupId un{GroupFamily::Unitary, Field::C, n, 0, 0, Unit::j};
  const GroupId o2n{GroupFamily::Unitary, Field::R, 2 * n, 0, 0, Unit::j};
  const GroupId sp2n{GroupFamily::Symplectic, Field::R, n, 0, 0, Unit::j};
  const Matrix<double> r = realify(sample_group<cd>(un, rng));
  std::printf("\nrealified U(%d) sample: O(%d) residual %.3e, Sp(%d,R) residual %.3e\n", n, 2 * n,
              membership_residual(o2n, r), 2 * n, membership_residual(sp2n, r));
  return 0;
}
