#include <catch2/catch_amalgamated.hpp>

#include <numbers>

#include "kak/decompose.hpp"
#include "kak/verify.hpp"

using namespace kak;

namespace {

// Round-trip: sample g from the cell's group, decompose, recompose, compare.
template <class T>
void roundtrip(int family, int beta, const CaseParams& c, unsigned seed, int trials = 5) {
  const auto sp = make_spec(family, beta, c);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto ref = sample_factored<T>(sp, rng);
    const Matrix<T> g = compose(sp, ref);
    const auto fe = decompose(sp, g);
    const auto rep = verify_factored(sp, fe, &g, &ref.theta);
    INFO(sp.label << " trial " << t << "\n" << to_text(rep));
    REQUIRE(rep.pass);
  }
}

}  // namespace

TEST_CASE("round trips across every implemented route", "[decompose]") {
  roundtrip<cd>(1, 2, CaseParams{.n = 4}, 101);
  roundtrip<double>(4, 1, CaseParams{.p = 2, .q = 2, .r = 3, .s = 1}, 102);
  roundtrip<cd>(4, 2, CaseParams{.p = 2, .q = 2, .r = 2, .s = 2}, 103);
  roundtrip<double>(4, 1, CaseParams{.p = 2, .q = 1, .r = 3, .s = 0}, 104);  // s = 0 edge
  roundtrip<double>(7, 1, CaseParams{.n = 5}, 105);
  roundtrip<cd>(7, 2, CaseParams{.n = 4}, 106);
  roundtrip<Quaternion>(7, 4, CaseParams{.n = 3}, 107);
  roundtrip<double>(9, 1, CaseParams{.p = 2, .q = 2}, 108);
  roundtrip<cd>(9, 2, CaseParams{.p = 3, .q = 1}, 109);
  roundtrip<double>(10, 1, CaseParams{.n = 3}, 110);
  roundtrip<cd>(13, 2, CaseParams{.n = 4}, 111);
  roundtrip<double>(18, 1, CaseParams{.p = 3, .q = 2}, 112);
  roundtrip<cd>(18, 2, CaseParams{.p = 2, .q = 2}, 113);
}

TEST_CASE("phase-splitting oracle on a diagonal unitary", "[decompose]") {
  // diag(i, 1): phases pi/2 and 0, orthogonal factors are signed permutations.
  Matrix<cd> u(2, 2);
  u(0, 0) = cd(0.0, 1.0);
  u(1, 1) = cd(1.0, 0.0);
  const auto fe = odo(u);
  REQUIRE(fe.theta[0] == Catch::Approx(std::numbers::pi / 2.0).margin(1e-12));
  REQUIRE(fe.theta[1] == Catch::Approx(0.0).margin(1e-12));
  const auto sp = make_spec(1, 2, CaseParams{.n = 2});
  REQUIRE(diff_norm(compose(sp, fe), u) < 1e-12);
  // A real orthogonal input stays real: all phases are 0 or the k-factors
  // absorb the signs.
  Matrix<cd> rot(2, 2);
  const double c0 = std::cos(0.7), s0 = std::sin(0.7);
  rot(0, 0) = rot(1, 1) = c0;
  rot(0, 1) = -s0;
  rot(1, 0) = s0;
  const auto fr = odo(rot);
  REQUIRE(diff_norm(compose(sp, fr), rot) < 1e-12);
  for (double th : fr.theta) REQUIRE((std::abs(th) < 1e-9 || std::abs(th - std::numbers::pi) < 1e-9));
}

TEST_CASE("cs decomposition oracle on a plane rotation", "[decompose]") {
  // The 2x2 rotation by t against partition (1,1,1,1) has theta = t exactly
  // (up to factor signs).
  const double t = 0.3;
  Matrix<double> g(2, 2);
  g(0, 0) = g(1, 1) = std::cos(t);
  g(0, 1) = std::sin(t);
  g(1, 0) = -std::sin(t);
  const auto fe = csd(g, 1, 1, 1, 1);
  REQUIRE(fe.theta[0] == Catch::Approx(t).margin(1e-12));
  const auto sp = make_spec(4, 1, CaseParams{.p = 1, .q = 1, .r = 1, .s = 1});
  REQUIRE(diff_norm(compose(sp, fe), g) < 1e-12);
}

TEST_CASE("hyperbolic svd oracle on a diagonal stretch", "[decompose]") {
  // diag(2, 3) in GL(2, R) against signature (1, 1): singular-value logs,
  // block-sorted (descending within each signature block).
  Matrix<double> g(2, 2);
  g(0, 0) = 2.0;
  g(1, 1) = 3.0;
  const auto fe = hsvd(g, 1, 1);
  REQUIRE(fe.theta[0] == Catch::Approx(std::log(2.0)).margin(1e-12));
  REQUIRE(fe.theta[1] == Catch::Approx(std::log(3.0)).margin(1e-12));
  REQUIRE(membership_residual(detail::indefinite(Field::R, 1, 1), fe.k2) < 1e-12);
}

TEST_CASE("symplectic svd oracle on a uniform stretch", "[decompose]") {
  const auto fe = sympl_svd(Matrix<double>::identity(4).scaled(2.0));
  REQUIRE(fe.theta[0] == Catch::Approx(std::log(2.0)).margin(1e-12));
  REQUIRE(fe.theta[1] == Catch::Approx(std::log(2.0)).margin(1e-12));
  REQUIRE(membership_residual(detail::symplectic(Field::R, 2), fe.k2) < 1e-12);
}

TEST_CASE("unitary-stretch-orthogonal oracle", "[decompose]") {
  // diag(1 + i) = e^{i pi/4} diag(sqrt 2): theta = log(sqrt 2), k1 a phase.
  Matrix<cd> g(1, 1);
  g(0, 0) = cd(1.0, 1.0);
  const auto fe = uso_factor(g);
  REQUIRE(fe.theta[0] == Catch::Approx(0.5 * std::log(2.0)).margin(1e-12));
  REQUIRE(std::abs(std::abs(fe.k1(0, 0)) - 1.0) < 1e-12);
}

TEST_CASE("decompose dispatcher agrees with has_decomposition", "[decompose]") {
  int routed = 0;
  for (const auto& id : catalog()) {
    const auto sp = make_spec(id, default_cases(id.family).front());
    Rng rng(mix_seed(55u, id.family, id.beta));
    const auto run = [&]<class T>() {
      const auto g = compose(sp, sample_factored<T>(sp, rng));
      if (has_decomposition(id)) {
        ++routed;
        const auto fe = decompose(sp, g);
        REQUIRE(verify_factored(sp, fe, &g).pass);
      } else {
        REQUIRE_THROWS_AS(decompose(sp, g), UnsupportedDecomposition);
      }
    };
    if (sp.field == Field::R) run.operator()<double>();
    else if (sp.field == Field::C) run.operator()<cd>();
    else run.operator()<Quaternion>();
  }
  REQUIRE(routed == 12);  // the implemented cells
}

TEST_CASE("wrong scalar type is rejected by the dispatcher", "[decompose]") {
  const auto sp = make_spec(7, 2, CaseParams{.n = 2});
  REQUIRE_THROWS_AS(decompose(sp, Matrix<double>::identity(2)), UnsupportedDecomposition);
}

TEST_CASE("error paths carry their diagnostics", "[decompose]") {
  // Singular input.
  Matrix<double> rank1(2, 2);
  rank1(0, 0) = 1.0;
  REQUIRE_THROWS_AS(svd_factor(rank1), SingularMatrix);
  REQUIRE_THROWS_AS(hsvd(rank1, 1, 1), SingularMatrix);
  // Bad partitions.
  REQUIRE_THROWS_AS(csd(Matrix<double>::identity(2), 1, 1, 2, 1), BadPartition);
  REQUIRE_THROWS_AS(csd(Matrix<double>::identity(3), 1, 1, 1, 1), BadPartition);
  REQUIRE_THROWS_AS(hcsd(Matrix<double>::identity(3), 1, 2), BadPartition);
  REQUIRE_THROWS_AS(sympl_svd(Matrix<double>::identity(3)), BadPartition);
  REQUIRE_THROWS_AS(svd_factor(Matrix<double>(2, 3)), BadPartition);
  // Signature mismatch is defensive-only (Sylvester's law keeps invertible
  // inputs consistent); check the diagnostics it would carry.
  const SignatureMismatch sm(2, 1);
  REQUIRE(sm.expected_positive == 2);
  REQUIRE(sm.found_positive == 1);
  REQUIRE(std::string(sm.what()).find("expected 2") != std::string::npos);
  // Symmetry guards.
  Matrix<cd> notsym(2, 2);
  notsym(0, 1) = cd(1.0, 0.0);
  REQUIRE_THROWS_AS(takagi(notsym), NotSymmetric);
  REQUIRE_THROWS_AS(chol_complex_symmetric(notsym), NotSymmetric);
  Matrix<double> notsym_r(2, 2);
  notsym_r(0, 1) = 1.0;
  REQUIRE_THROWS_AS(williamson(block_diag(notsym_r, notsym_r)), NotSymmetric);
  // Positive definiteness guards.
  REQUIRE_THROWS_AS(williamson(Matrix<double>::identity(4).scaled(-1.0)), NotPositiveDefinite);
  REQUIRE_THROWS_AS(hyperbolic_eigen(Matrix<double>::identity(2).scaled(-1.0), 1, 1),
                    NotPositiveDefinite);
  // Pivot breakdown on an antidiagonal symmetric matrix.
  Matrix<cd> anti(2, 2);
  anti(0, 1) = anti(1, 0) = cd(1.0, 0.0);
  REQUIRE_THROWS_AS(chol_complex_symmetric(anti), PivotBreakdown);
}

TEST_CASE("clustered singular values stay exact", "[decompose]") {
  // Build a complex unitary-conjugated diagonal with a triple cluster and run
  // the two cluster-sensitive routes on it.
  Rng rng(77);
  const int n = 5;
  const auto q1 = sample_group<cd>(detail::unitary(Field::C, n), rng);
  Matrix<cd> d(n, n);
  const double svals[n] = {2.0, 2.0, 2.0, 0.5, 0.5};
  for (int i = 0; i < n; ++i) d(i, i) = cd(svals[i], 0.0);
  // Takagi of Q D Q^T.
  const Matrix<cd> a = q1 * d * q1.conj_transpose(TransposeKind::T);
  const auto tk = takagi(a);
  REQUIRE(diff_norm(tk.u * diag_from<cd>(tk.lambda) * tk.u.conj_transpose(TransposeKind::T), a) <
          1e-10);
  REQUIRE(membership_residual(detail::unitary(Field::C, n), tk.u) < 1e-10);
  // SVD route on Q D Q2 with repeated sigma.
  const auto q2 = sample_group<cd>(detail::unitary(Field::C, n), rng);
  const Matrix<cd> g = q1 * d * q2;
  const auto fe = svd_factor(g);
  const auto sp = make_spec(7, 2, CaseParams{.n = n});
  REQUIRE(diff_norm(compose(sp, fe), g) < 1e-10);
}
