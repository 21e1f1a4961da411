#include <catch2/catch_amalgamated.hpp>

#include "kak/matrix.hpp"
#include "kak/rng.hpp"

using namespace kak;

TEST_CASE("identity, zero, and norms", "[matrix]") {
  const auto id = Matrix<double>::identity(3);
  REQUIRE(id(0, 0) == 1.0);
  REQUIRE(id(0, 1) == 0.0);
  REQUIRE(id.norm_fro() == Catch::Approx(std::sqrt(3.0)));
  const auto z = Matrix<cd>::zero(2, 4);
  REQUIRE(z.rows() == 2);
  REQUIRE(z.cols() == 4);
  REQUIRE(z.norm_fro() == 0.0);
}

TEST_CASE("product against a hand oracle", "[matrix]") {
  Matrix<double> a(2, 3), b(3, 2);
  int v = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = v++;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) b(i, j) = v++;
  const Matrix<double> c = a * b;
  // [[1,2,3],[4,5,6]] * [[7,8],[9,10],[11,12]] = [[58,64],[139,154]]
  REQUIRE(c(0, 0) == 58.0);
  REQUIRE(c(0, 1) == 64.0);
  REQUIRE(c(1, 0) == 139.0);
  REQUIRE(c(1, 1) == 154.0);
}

TEST_CASE("block extraction and placement invert each other", "[matrix]") {
  Rng rng(11);
  const auto m = rng.gauss_matrix<cd>(5, 5);
  const auto b = m.block(1, 2, 3, 2);
  Matrix<cd> copy = m;
  copy.set_block(1, 2, b);
  REQUIRE(diff_norm(copy, m) == 0.0);
  const auto d = block_diag(Matrix<double>::identity(2), Matrix<double>::identity(3).scaled(2.0));
  REQUIRE(d.rows() == 5);
  REQUIRE(d(0, 0) == 1.0);
  REQUIRE(d(4, 4) == 2.0);
  REQUIRE(d(0, 4) == 0.0);
}

TEST_CASE("transpose kinds on a complex witness", "[matrix]") {
  Matrix<cd> m(1, 2);
  m(0, 0) = cd(1, 2);
  m(0, 1) = cd(-3, 4);
  const auto t = m.conj_transpose(TransposeKind::T);
  REQUIRE(t.rows() == 2);
  REQUIRE(t(0, 0) == cd(1, 2));
  const auto h = m.conj_transpose(TransposeKind::H);
  REQUIRE(h(0, 0) == cd(1, -2));
  REQUIRE(h(1, 0) == cd(-3, -4));
}

TEST_CASE("quaternion dual transposes", "[matrix]") {
  const Quaternion q(1, 2, 3, 4);
  Matrix<Quaternion> m(1, 1);
  m(0, 0) = q;
  REQUIRE(m.conj_transpose(TransposeKind::D)(0, 0) == qconj(q));
  // D_j conjugates only the j component: -j q^D j.
  const Quaternion j(0, 0, 1, 0);
  REQUIRE(m.conj_transpose(TransposeKind::Dj)(0, 0) == -(j * qconj(q) * j));
  // (M N)^D = N^D M^D on a random pair.
  Rng rng(12);
  const auto a = rng.gauss_matrix<Quaternion>(3, 3);
  const auto b = rng.gauss_matrix<Quaternion>(3, 3);
  const auto lhs = (a * b).conj_transpose(TransposeKind::D);
  const auto rhs = b.conj_transpose(TransposeKind::D) * a.conj_transpose(TransposeKind::D);
  REQUIRE(diff_norm(lhs, rhs) < 1e-13);
}

TEST_CASE("lift widens the scalar field entrywise", "[matrix]") {
  Matrix<double> r(2, 2);
  r(0, 1) = 3.5;
  const auto c = lift<cd>(r);
  REQUIRE(c(0, 1) == cd(3.5, 0));
  const auto h = lift<Quaternion>(c);
  REQUIRE(h(0, 1) == Quaternion(3.5, 0, 0, 0));
}

TEST_CASE("diag_from builds a real diagonal in any field", "[matrix]") {
  const auto d = diag_from<cd>({2.0, -1.0});
  REQUIRE(d(0, 0) == cd(2, 0));
  REQUIRE(d(1, 1) == cd(-1, 0));
  REQUIRE(d(0, 1) == cd(0, 0));
}
