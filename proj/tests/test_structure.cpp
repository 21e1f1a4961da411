#include <catch2/catch_amalgamated.hpp>

#include "kak/groups.hpp"
#include "kak/rng.hpp"
#include "kak/structure.hpp"

using namespace kak;

namespace {
constexpr double kTight = 10.0 * std::numeric_limits<double>::epsilon();

double scaled_tol(double norm) { return kTight * std::max(1.0, norm); }
}  // namespace

TEST_CASE("realify and complexify are ring homomorphisms", "[structure]") {
  Rng rng(21);
  const auto a = rng.gauss_matrix<cd>(3, 4);
  const auto b = rng.gauss_matrix<cd>(4, 2);
  REQUIRE(diff_norm(realify(a * b), realify(a) * realify(b)) <
          scaled_tol(a.norm_fro() * b.norm_fro()) * 8);
  const auto p = rng.gauss_matrix<Quaternion>(3, 3);
  const auto q = rng.gauss_matrix<Quaternion>(3, 3);
  REQUIRE(diff_norm(complexify(p * q), complexify(p) * complexify(q)) <
          scaled_tol(p.norm_fro() * q.norm_fro()) * 8);
}

TEST_CASE("the six structure-map identities", "[structure]") {
  Rng rng(22);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4;
    const auto c = rng.gauss_matrix<cd>(n, n);
    const auto q = rng.gauss_matrix<Quaternion>(n, n);
    const auto inn = mat_Ipq<double>(n, n);
    const auto jn = mat_J<double>(n);
    const auto jc = mat_J<cd>(n);
    const double tc = scaled_tol(c.norm_fro());
    const double tq = scaled_tol(q.norm_fro());

    // (1) realify(C^H) = realify(C)^T
    REQUIRE(diff_norm(realify(c.conj_transpose(TransposeKind::H)),
                      realify(c).conj_transpose(TransposeKind::T)) < tc);
    // (2) realify(C^T) = I_{n,n} realify(C)^T I_{n,n}
    REQUIRE(diff_norm(realify(c.conj_transpose(TransposeKind::T)),
                      inn * realify(c).conj_transpose(TransposeKind::T) * inn) < tc);
    // (3) complexify(Q^D) = complexify(Q)^H
    REQUIRE(diff_norm(complexify(q.conj_transpose(TransposeKind::D)),
                      complexify(q).conj_transpose(TransposeKind::H)) < tq);
    // (4) complexify(Q^{D_j}) = complexify(Q)^T = -J complexify(Q)^H J
    const auto dj = complexify(q.conj_transpose(TransposeKind::Dj));
    REQUIRE(diff_norm(dj, complexify(q).conj_transpose(TransposeKind::T)) < tq);
    REQUIRE(diff_norm(dj, (jc * complexify(q).conj_transpose(TransposeKind::H) * jc).scaled(-1.0)) <
            tq);
    // (5) -J realify(C) J = realify(C)
    REQUIRE(diff_norm((jn * realify(c) * jn).scaled(-1.0), realify(c)) < tc);
    // (6) -J conj(complexify(Q)) J = complexify(Q)
    REQUIRE(diff_norm((jc * complexify(q).conj() * jc).scaled(-1.0), complexify(q)) < tq);
  }
}

TEST_CASE("derealify and decomplexify invert the embeddings", "[structure]") {
  Rng rng(23);
  const auto c = rng.gauss_matrix<cd>(3, 5);
  double res = 1.0;
  REQUIRE(diff_norm(derealify(realify(c), &res), c) == 0.0);
  REQUIRE(res == 0.0);
  const auto q = rng.gauss_matrix<Quaternion>(4, 2);
  REQUIRE(diff_norm(decomplexify(complexify(q), &res), q) == 0.0);
  REQUIRE(res == 0.0);
  // A matrix without the paired structure is flagged by the residual.
  auto bad = realify(c.block(0, 0, 2, 2));
  bad(0, 0) += 0.5;
  derealify(bad, &res);
  REQUIRE(res > 0.1);
}

TEST_CASE("auxiliary matrices", "[structure]") {
  const auto e = mat_E<double>(3);
  REQUIRE(e(0, 2) == 1.0);
  REQUIRE(e(1, 1) == 1.0);
  REQUIRE(e(0, 0) == 0.0);
  const auto j = mat_J<double>(2);
  REQUIRE(diff_norm(j * j, Matrix<double>::identity(4).scaled(-1.0)) == 0.0);
  const auto ipq = mat_Ipq<double>(1, 2);
  REQUIRE(ipq(0, 0) == 1.0);
  REQUIRE(ipq(1, 1) == -1.0);
  REQUIRE(ipq(2, 2) == -1.0);
}

TEST_CASE("beta doubling sends U(n) into O(2n) and Sp(2n, R)", "[structure]") {
  Rng rng(24);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    const auto u = sample_group<cd>(GroupId{GroupFamily::Unitary, Field::C, n}, rng);
    const auto r = realify(u);
    const auto rt = r.conj_transpose(TransposeKind::T);
    REQUIRE(diff_norm(rt * r, Matrix<double>::identity(2 * n)) < 1e-10 * n);
    const auto jn = mat_J<double>(n);
    REQUIRE(diff_norm(rt * jn * r, jn) < 1e-10 * n);
  }
}

TEST_CASE("beta doubling sends U(n, H) into U(2n) and Sp(2n, C)", "[structure]") {
  Rng rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    const auto u = sample_group<Quaternion>(GroupId{GroupFamily::Unitary, Field::H, n}, rng);
    const auto cimg = complexify(u);
    const auto ch = cimg.conj_transpose(TransposeKind::H);
    REQUIRE(diff_norm(ch * cimg, Matrix<cd>::identity(2 * n)) < 1e-10 * n);
    const auto jn = mat_J<cd>(n);
    REQUIRE(diff_norm(cimg.conj_transpose(TransposeKind::T) * jn * cimg, jn) < 1e-10 * n);
  }
}
