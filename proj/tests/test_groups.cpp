#include <catch2/catch_amalgamated.hpp>

#include <limits>

#include "kak/groups.hpp"

using namespace kak;

namespace {

template <class T>
void check_group(const GroupId& g, unsigned seed) {
  Rng rng(seed);
  for (int t = 0; t < 4; ++t) {
    const Matrix<T> x = sample_algebra<T>(g, rng);
    REQUIRE(algebra_residual(g, x) < 1e-12);
    const Matrix<T> m = sample_group<T>(g, rng);
    REQUIRE(membership_residual(g, m) < 1e-11 * g.size());
    // Group axioms at the numerical level: closure and inverses.
    const Matrix<T> m2 = sample_group<T>(g, rng);
    REQUIRE(membership_residual(g, m * m2) < 1e-10 * g.size());
  }
}

}  // namespace

TEST_CASE("all thirteen groups sample onto their defining relations", "[groups]") {
  check_group<double>({GroupFamily::GeneralLinear, Field::R, 4}, 1);
  check_group<cd>({GroupFamily::GeneralLinear, Field::C, 4}, 2);
  check_group<Quaternion>({GroupFamily::GeneralLinear, Field::H, 3}, 3);
  check_group<double>({GroupFamily::Unitary, Field::R, 5}, 4);
  check_group<cd>({GroupFamily::Unitary, Field::C, 5}, 5);
  check_group<Quaternion>({GroupFamily::Unitary, Field::H, 3}, 6);
  check_group<double>({GroupFamily::IndefiniteUnitary, Field::R, 0, 3, 2}, 7);
  check_group<cd>({GroupFamily::IndefiniteUnitary, Field::C, 0, 3, 2}, 8);
  check_group<Quaternion>({GroupFamily::IndefiniteUnitary, Field::H, 0, 2, 1}, 9);
  check_group<cd>({GroupFamily::ComplexOrthogonal, Field::C, 4}, 10);
  check_group<Quaternion>({GroupFamily::QuaternionOrthogonal, Field::H, 3, 0, 0, Unit::j}, 11);
  check_group<double>({GroupFamily::Symplectic, Field::R, 3}, 12);
  check_group<cd>({GroupFamily::Symplectic, Field::C, 3}, 13);
}

TEST_CASE("defining relation spelled out for witnesses", "[groups]") {
  Rng rng(99);
  // Real symplectic: g^T J g = J.
  const GroupId sp{GroupFamily::Symplectic, Field::R, 2};
  const auto g = sample_group<double>(sp, rng);
  REQUIRE(diff_norm(g.transpose() * mat_J<double>(2) * g, mat_J<double>(2)) < 1e-12);
  // Indefinite unitary: g^H I_pq g = I_pq.
  const GroupId u21{GroupFamily::IndefiniteUnitary, Field::C, 0, 2, 1};
  const auto h = sample_group<cd>(u21, rng);
  REQUIRE(diff_norm(h.conj_transpose(TransposeKind::H) * mat_Ipq<cd>(2, 1) * h,
                    mat_Ipq<cd>(2, 1)) < 1e-12);
  // Quaternion eta-orthogonal: g^{D_j} g = I.
  const GroupId oj{GroupFamily::QuaternionOrthogonal, Field::H, 2, 0, 0, Unit::j};
  const auto q = sample_group<Quaternion>(oj, rng);
  REQUIRE(diff_norm(q.conj_transpose(TransposeKind::Dj) * q, Matrix<Quaternion>::identity(2)) <
          1e-12);
}

TEST_CASE("group names and sizes", "[groups]") {
  REQUIRE(GroupId{GroupFamily::GeneralLinear, Field::H, 3}.name() == "GL(3,H)");
  REQUIRE(GroupId{GroupFamily::Unitary, Field::R, 4}.name() == "O(4)");
  REQUIRE(GroupId{GroupFamily::Unitary, Field::H, 4}.name() == "U(4,H)");
  REQUIRE(GroupId{GroupFamily::IndefiniteUnitary, Field::C, 0, 3, 1}.name() == "U(3,1)");
  REQUIRE(GroupId{GroupFamily::ComplexOrthogonal, Field::C, 5}.name() == "O(5,C)");
  REQUIRE(GroupId{GroupFamily::QuaternionOrthogonal, Field::H, 2, 0, 0, Unit::i}.name() ==
          "O_i(2,H)");
  REQUIRE(GroupId{GroupFamily::Symplectic, Field::C, 3}.name() == "Sp(6,C)");
  REQUIRE(GroupId{GroupFamily::IndefiniteUnitary, Field::R, 0, 3, 2}.size() == 5);
  REQUIRE(GroupId{GroupFamily::Symplectic, Field::R, 3}.size() == 6);
}

TEST_CASE("membership rejects wrong shapes, fields, and singular GL", "[groups]") {
  const GroupId gl{GroupFamily::GeneralLinear, Field::R, 2};
  Matrix<double> singular(2, 2);
  singular(0, 0) = 1.0;  // rank one
  REQUIRE(membership_residual(gl, singular) == std::numeric_limits<double>::infinity());
  REQUIRE(membership_residual(gl, Matrix<double>::identity(2)) == 0.0);
  REQUIRE(membership_residual(gl, Matrix<double>::identity(3)) ==
          std::numeric_limits<double>::infinity());
  const GroupId un{GroupFamily::Unitary, Field::C, 2};
  REQUIRE(membership_residual(un, Matrix<double>::identity(2)) ==
          std::numeric_limits<double>::infinity());
  // A clearly non-unitary matrix scores a large residual.
  REQUIRE(membership_residual(un, Matrix<cd>::identity(2).scaled(2.0)) > 1.0);
}
