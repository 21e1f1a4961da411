#include <catch2/catch_amalgamated.hpp>

#include "kak/verify.hpp"

using namespace kak;

namespace {

template <class T>
void check_fold(const FactorizationSpec& sp, unsigned seed) {
  Rng rng(seed);
  const auto fe = sample_factored<T>(sp, rng);
  const Matrix<T> g = compose(sp, fe);
  const double scale = std::max(1.0, g.norm_fro() * g.norm_fro());
  for (FoldSide side : {FoldSide::Right, FoldSide::Left}) {
    const double r = fold_identity_residual(sp, fe, side);
    INFO(sp.label << (side == FoldSide::Right ? " right" : " left") << " residual " << r);
    REQUIRE(r < 1e-10 * scale);
  }
  // The folded element stays in the ambient group.
  const auto fr = fold(sp, fe, FoldSide::Right);
  REQUIRE(membership_residual(sp.group, fr.folded) < 1e-9 * scale);
}

}  // namespace

TEST_CASE("folding identities hold on both sides for every cell", "[fold]") {
  for (const auto& id : catalog()) {
    const auto sp = make_spec(id, default_cases(id.family).front());
    const unsigned seed = mix_seed(909u, id.family, id.beta);
    switch (sp.field) {
      case Field::R: check_fold<double>(sp, seed); break;
      case Field::C: check_fold<cd>(sp, seed); break;
      case Field::H: check_fold<Quaternion>(sp, seed); break;
    }
  }
}

TEST_CASE("folding doubles the angles", "[fold]") {
  // For a pure middle element (k1 = k2 = 1), the right fold is exactly
  // a(theta) tau(a(theta))^{-1} = a(2 theta).
  const auto sp = make_spec(18, 2, CaseParams{.p = 2, .q = 1});
  Rng rng(7);
  FactoredElement<cd> fe;
  fe.k1 = Matrix<cd>::identity(3);
  fe.k2 = Matrix<cd>::identity(3);
  fe.theta = sample_angles(rng, sp.middle.angle_count, sp.middle.domain);
  const auto fr = fold(sp, fe, FoldSide::Right);
  REQUIRE(diff_norm(fr.folded, fr.middle) < 1e-12);
  std::vector<double> doubled(fe.theta);
  for (double& t : doubled) t *= 2.0;
  REQUIRE(diff_norm(fr.middle, middle_build<cd>(sp.middle, doubled)) < 1e-13);
}

TEST_CASE("middle semigroup property", "[fold]") {
  // a(theta) a(theta) = a(2 theta) for a rotation-pair middle.
  const auto sp = make_spec(4, 2, CaseParams{.p = 2, .q = 2, .r = 2, .s = 2});
  Rng rng(8);
  const auto th = sample_angles(rng, sp.middle.angle_count, sp.middle.domain);
  std::vector<double> doubled(th);
  for (double& t : doubled) t *= 2.0;
  const auto a = middle_build<cd>(sp.middle, th);
  REQUIRE(diff_norm(a * a, middle_build<cd>(sp.middle, doubled)) < 1e-13);
}
