#pragma once

// The registry enumerates the 53 factorization cells: 25 families, each over
// one, two, or three base fields.  A cell pins down the ambient group, both
// subgroup embeddings, the middle-factor template, and the involution pair
// (sigma fixing K1, tau fixing K2) whose simultaneous (-1)-eigenflat the
// middle factor exponentiates.

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kak/angles.hpp"
#include "kak/groups.hpp"
#include "kak/involution.hpp"
#include "kak/middles.hpp"
#include "kak/structure.hpp"

namespace kak {

struct FactorizationId {
  int family = 0;  // 1..25
  int beta = 0;    // 1 = real, 2 = complex, 4 = quaternion
  friend bool operator==(const FactorizationId& a, const FactorizationId& b) {
    return a.family == b.family && a.beta == b.beta;
  }
};

inline std::string cell_name(const FactorizationId& id) {
  return "F" + std::to_string(id.family) + "b" + std::to_string(id.beta);
}

inline Field beta_field(int beta) {
  switch (beta) {
    case 1: return Field::R;
    case 2: return Field::C;
    case 4: return Field::H;
  }
  throw std::invalid_argument("beta must be 1, 2, or 4");
}

inline const std::vector<int>& betas_for(int family) {
  static const std::vector<int> tab[26] = {
      {},           {2, 4},    {1, 2},    {2},       {1, 2, 4},  // -, F1..F4
      {2, 4},       {1, 2},    {1, 2, 4}, {1, 2, 4}, {1, 2, 4},  // F5..F9
      {1, 2},       {1, 2},    {2, 4},    {2, 4},    {1, 2},     // F10..F14
      {1, 2},       {1, 2},    {2},       {1, 2, 4}, {1, 2, 4},  // F15..F19
      {1, 2},       {1, 2},    {2, 4},    {2, 4},    {2, 4},     // F20..F24
      {2},                                                       // F25
  };
  if (family < 1 || family > 25)
    throw std::invalid_argument("family must lie in 1..25");
  return tab[family];
}

inline std::vector<FactorizationId> catalog() {
  std::vector<FactorizationId> out;
  for (int fam = 1; fam <= 25; ++fam)
    for (int b : betas_for(fam)) out.push_back({fam, b});
  return out;
}

// "F12b4", "f12b4", or "12:4".
inline std::optional<FactorizationId> parse_cell(const std::string& text) {
  std::string t = text;
  if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) t.erase(0, 1);
  const auto sep = t.find_first_of("b:");
  if (sep == std::string::npos) return std::nullopt;
  try {
    FactorizationId id{std::stoi(t.substr(0, sep)), std::stoi(t.substr(sep + 1))};
    const auto& betas = betas_for(id.family);
    if (std::find(betas.begin(), betas.end(), id.beta) == betas.end())
      return std::nullopt;
    return id;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

// Shape parameters of one problem instance.  Which fields matter depends on
// the family; see param_shape.
struct CaseParams {
  int n = 0;
  int p = 0, q = 0, r = 0, s = 0;
  int p1 = 0, q1 = 0, p2 = 0, q2 = 0;
};

enum class ParamShape { N, PQ, PQRS, Split };

inline ParamShape param_shape(int family) {
  switch (family) {
    case 4: return ParamShape::PQRS;
    case 19: return ParamShape::Split;
    case 5: case 6: case 8: case 9: case 16:
    case 18: case 20: case 22: case 24:
      return ParamShape::PQ;
    default: return ParamShape::N;
  }
}

inline std::string case_name(int family, const CaseParams& c) {
  std::ostringstream os;
  switch (param_shape(family)) {
    case ParamShape::N: os << "n=" << c.n; break;
    case ParamShape::PQ: os << "p=" << c.p << ",q=" << c.q; break;
    case ParamShape::PQRS:
      os << "p=" << c.p << ",q=" << c.q << ",r=" << c.r << ",s=" << c.s;
      break;
    case ParamShape::Split:
      os << "p1=" << c.p1 << ",q1=" << c.q1 << ",p2=" << c.p2 << ",q2=" << c.q2;
      break;
  }
  return os.str();
}

// How a subgroup factor sits inside the ambient matrix group.
enum class EmbedKind {
  Direct,            // the subgroup itself, same field and size
  SubfieldLift,      // entrywise lift from a smaller base field
  BlockDiag,         // diag(parts...)
  BlockDiagPerm,     // P^T diag(parts...) P
  Realified,         // realify(complex part)
  Complexified,      // complexify(quaternion part)
  RealifiedPerm,     // P realify(part) P^T
  ComplexifiedPerm,  // P complexify(part) P^T
  InvTransposePair,  // diag(g, g^{-T})
};

struct EmbedSpec {
  EmbedKind kind = EmbedKind::Direct;
  std::vector<GroupId> parts;
  Matrix<double> perm;  // only the *Perm kinds
};

struct FactorizationSpec {
  FactorizationId id;
  CaseParams prm;
  Field field = Field::R;  // ambient scalar field
  GroupId group;           // ambient group G
  EmbedSpec k1, k2;
  MiddleSpec middle;
  Involution sigma, tau;  // sigma fixes K1, tau fixes K2
  std::string label;
};

namespace detail {

inline GroupId gl(Field f, int n) {
  GroupId g;
  g.family = GroupFamily::GeneralLinear;
  g.field = f;
  g.n = n;
  return g;
}
inline GroupId unitary(Field f, int n) {
  GroupId g;
  g.family = GroupFamily::Unitary;
  g.field = f;
  g.n = n;
  return g;
}
inline GroupId indefinite(Field f, int p, int q) {
  GroupId g;
  g.family = GroupFamily::IndefiniteUnitary;
  g.field = f;
  g.n = p + q;
  g.p = p;
  g.q = q;
  return g;
}
inline GroupId complex_orth(int n) {
  GroupId g;
  g.family = GroupFamily::ComplexOrthogonal;
  g.field = Field::C;
  g.n = n;
  return g;
}
inline GroupId quat_orth(int n, Unit eta) {
  GroupId g;
  g.family = GroupFamily::QuaternionOrthogonal;
  g.field = Field::H;
  g.n = n;
  g.eta = eta;
  return g;
}
inline GroupId symplectic(Field f, int n) {
  GroupId g;
  g.family = GroupFamily::Symplectic;
  g.field = f;
  g.n = n;  // matrix size 2n
  return g;
}

// Base field one level below: C -> R, H -> C.
inline Field sub_field(Field f) {
  switch (f) {
    case Field::C: return Field::R;
    case Field::H: return Field::C;
    default: throw std::logic_error("the real field has no subfield here");
  }
}

// Dual whose negation is the compact Cartan involution of GL(n, F).
inline TransposeKind cartan_dual(Field f) {
  switch (f) {
    case Field::R: return TransposeKind::T;
    case Field::C: return TransposeKind::H;
    default: return TransposeKind::D;
  }
}

inline EmbedSpec direct(GroupId g) { return {EmbedKind::Direct, {g}, {}}; }
inline EmbedSpec lifted(GroupId g) { return {EmbedKind::SubfieldLift, {g}, {}}; }
inline EmbedSpec two_blocks(GroupId a, GroupId b) {
  return {EmbedKind::BlockDiag, {a, b}, {}};
}
inline EmbedSpec two_blocks_perm(GroupId a, GroupId b, Matrix<double> perm) {
  return {EmbedKind::BlockDiagPerm, {a, b}, std::move(perm)};
}
inline EmbedSpec realified(GroupId g) { return {EmbedKind::Realified, {g}, {}}; }
inline EmbedSpec complexified(GroupId g) {
  return {EmbedKind::Complexified, {g}, {}};
}
inline EmbedSpec realified_perm(GroupId g, Matrix<double> perm) {
  return {EmbedKind::RealifiedPerm, {g}, std::move(perm)};
}
inline EmbedSpec complexified_perm(GroupId g, Matrix<double> perm) {
  return {EmbedKind::ComplexifiedPerm, {g}, std::move(perm)};
}
inline EmbedSpec inv_transpose_pair(GroupId g) {
  return {EmbedKind::InvTransposePair, {g}, {}};
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid case parameters: " + what);
}

}  // namespace detail

inline FactorizationSpec make_spec(int family, int beta, const CaseParams& c) {
  using namespace detail;
  {
    const auto& betas = betas_for(family);
    if (std::find(betas.begin(), betas.end(), beta) == betas.end())
      throw std::invalid_argument("family " + std::to_string(family) +
                                  " has no beta=" + std::to_string(beta) +
                                  " variant");
  }
  FactorizationSpec sp;
  sp.id = {family, beta};
  sp.prm = c;
  sp.field = beta_field(beta);
  const Field f = sp.field;

  MiddleSpec& m = sp.middle;

  switch (family) {
    case 1: {
      require(c.n >= 1, "F1 needs n >= 1");
      sp.group = unitary(f, c.n);
      sp.k1 = sp.k2 = lifted(unitary(sub_field(f), c.n));
      m.kind = MiddleKind::PhaseDiag;
      m.dim = c.n;
      m.n = c.n;
      m.eta = (beta == 2) ? Unit::i : Unit::j;
      m.domain = AngleDomain::ZeroPi;
      m.angle_count = c.n;
      sp.sigma = sp.tau = Involution::neg_dual(
          beta == 2 ? TransposeKind::T : TransposeKind::Di);
      break;
    }
    case 2: {
      require(c.n >= 1, "F2 needs n >= 1");
      sp.group = unitary(f, 2 * c.n);
      if (beta == 1) {
        sp.k1 = sp.k2 = realified(unitary(Field::C, c.n));
        m.kind = MiddleKind::RotDouble;
        m.domain = AngleDomain::ZeroHalfPi;
        m.angle_count = c.n / 2;
      } else {
        sp.k1 = sp.k2 = complexified(unitary(Field::H, c.n));
        m.kind = MiddleKind::PhaseDiagDouble;
        m.domain = AngleDomain::ZeroPi;
        m.angle_count = c.n;
      }
      m.dim = 2 * c.n;
      m.n = c.n;
      sp.sigma = sp.tau = Involution::similarity(mat_J<double>(c.n), beta == 2);
      break;
    }
    case 3: {
      require(c.n >= 1, "F3 needs n >= 1");
      sp.group = unitary(Field::C, 2 * c.n);
      sp.k1 = lifted(unitary(Field::R, 2 * c.n));
      sp.k2 = complexified(unitary(Field::H, c.n));
      m.kind = MiddleKind::PhaseDiagDouble;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.domain = AngleDomain::ZeroPi;
      m.angle_count = c.n;
      sp.sigma = Involution::neg_dual(TransposeKind::T);
      sp.tau = Involution::similarity(mat_J<double>(c.n), true);
      break;
    }
    case 4: {
      require(c.p >= 0 && c.q >= 0 && c.r >= 0 && c.s >= 0, "F4 needs nonnegative p,q,r,s");
      require(c.r >= c.p && c.p >= c.q && c.q >= c.s, "F4 needs r >= p >= q >= s");
      require(c.p + c.q == c.r + c.s, "F4 needs p+q = r+s");
      require(c.p + c.q >= 1, "F4 needs p+q >= 1");
      const int n = c.p + c.q;
      sp.group = unitary(f, n);
      sp.k1 = two_blocks(unitary(f, c.p), unitary(f, c.q));
      sp.k2 = two_blocks(unitary(f, c.r), unitary(f, c.s));
      m.kind = MiddleKind::CsPair;
      m.dim = n;
      m.p = c.p;
      m.q = c.q;
      m.s = c.s;
      m.domain = AngleDomain::ZeroHalfPi;
      m.angle_count = c.s;
      sp.sigma = Involution::similarity(mat_Ipq<double>(c.p, c.q));
      sp.tau = Involution::similarity(mat_Ipq<double>(c.r, c.s));
      break;
    }
    case 5: {
      require(c.p >= c.q && c.q >= 0 && c.p + c.q >= 1, "F5 needs p >= q >= 0, p+q >= 1");
      const int n = c.p + c.q;
      sp.group = unitary(f, n);
      sp.k1 = lifted(unitary(sub_field(f), n));
      sp.k2 = two_blocks(unitary(f, c.p), unitary(f, c.q));
      m.kind = MiddleKind::CsCorner;
      m.dim = n;
      m.p = c.p;
      m.q = c.q;
      m.eta = (beta == 2) ? Unit::i : Unit::j;
      m.domain = AngleDomain::ZeroHalfPi;
      m.angle_count = c.q;
      sp.sigma = Involution::neg_dual(beta == 2 ? TransposeKind::T
                                                : TransposeKind::Di);
      sp.tau = Involution::similarity(mat_Ipq<double>(c.p, c.q));
      break;
    }
    case 6: {
      require(c.p >= c.q && c.q >= 0 && c.p >= 1, "F6 needs p >= q >= 0, p >= 1");
      const int n = c.p + c.q;
      sp.group = unitary(f, 2 * n);
      sp.k1 = (beta == 1) ? realified(unitary(Field::C, n))
                          : complexified(unitary(Field::H, n));
      sp.k2 = two_blocks(unitary(f, 2 * c.p), unitary(f, 2 * c.q));
      m.kind = MiddleKind::CsKron;
      m.dim = 2 * n;
      m.p = c.p;
      m.q = c.q;
      m.domain = AngleDomain::ZeroHalfPi;
      m.angle_count = c.q;
      sp.sigma = Involution::similarity(mat_J<double>(n), beta == 2);
      sp.tau = Involution::similarity(mat_Ipq<double>(2 * c.p, 2 * c.q));
      break;
    }
    case 7: {
      require(c.n >= 1, "F7 needs n >= 1");
      sp.group = gl(f, c.n);
      sp.k1 = sp.k2 = direct(unitary(f, c.n));
      m.kind = MiddleKind::ExpDiag;
      m.dim = c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = sp.tau = Involution::neg_dual(cartan_dual(f));
      break;
    }
    case 8: {
      require(c.p >= c.q && c.q >= 0 && c.p + c.q >= 1, "F8 needs p >= q >= 0, p+q >= 1");
      const int n = c.p + c.q;
      sp.group = gl(f, n);
      sp.k1 = direct(unitary(f, n));
      sp.k2 = two_blocks(gl(f, c.p), gl(f, c.q));
      m.kind = MiddleKind::HypPair;
      m.dim = n;
      m.p = c.p;
      m.q = c.q;
      m.angle_count = c.q;
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = Involution::similarity(mat_Ipq<double>(c.p, c.q));
      break;
    }
    case 9: {
      require(c.p >= c.q && c.q >= 0 && c.p + c.q >= 1, "F9 needs p >= q >= 0, p+q >= 1");
      const int n = c.p + c.q;
      sp.group = gl(f, n);
      sp.k1 = direct(unitary(f, n));
      sp.k2 = direct(indefinite(f, c.p, c.q));
      m.kind = MiddleKind::ExpDiag;
      m.dim = n;
      m.n = n;
      m.angle_count = n;
      // The stabilizer U(p) x U(q) only permutes exponents within the two
      // signature blocks, so each block is ordered independently.
      m.angle_split = {c.p, c.q};
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = Involution::neg_dual_gamma(cartan_dual(f),
                                          mat_Ipq<double>(c.p, c.q));
      break;
    }
    case 10: {
      require(c.n >= 1, "F10 needs n >= 1");
      sp.group = gl(f, 2 * c.n);
      sp.k1 = direct(unitary(f, 2 * c.n));
      sp.k2 = direct(symplectic(f, c.n));
      m.kind = MiddleKind::ExpDiagDouble;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = Involution::neg_dual_gamma(TransposeKind::T, mat_J<double>(c.n));
      break;
    }
    case 11: {
      require(c.n >= 1, "F11 needs n >= 1");
      sp.group = gl(f, 2 * c.n);
      sp.k1 = direct(unitary(f, 2 * c.n));
      sp.k2 = (beta == 1) ? realified(gl(Field::C, c.n))
                          : complexified(gl(Field::H, c.n));
      m.kind = MiddleKind::ExpDiagInvPair;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = Involution::similarity(mat_J<double>(c.n), beta == 2);
      break;
    }
    case 12: {
      require(c.n >= 1, "F12 needs n >= 1");
      sp.group = gl(f, c.n);
      sp.k1 = direct(unitary(f, c.n));
      sp.k2 = lifted(gl(sub_field(f), c.n));
      m.kind = MiddleKind::HypBlocks;
      m.dim = c.n;
      m.n = c.n;
      m.eta = (beta == 2) ? Unit::i : Unit::j;
      m.angle_count = c.n / 2;
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = (beta == 2) ? Involution::bar() : Involution::unit(Unit::i);
      break;
    }
    case 13: {
      require(c.n >= 1, "F13 needs n >= 1");
      sp.group = gl(f, c.n);
      sp.k1 = direct(unitary(f, c.n));
      sp.k2 = (beta == 2) ? direct(complex_orth(c.n))
                          : direct(quat_orth(c.n, Unit::j));
      m.kind = MiddleKind::ExpDiag;
      m.dim = c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = Involution::neg_dual(beta == 2 ? TransposeKind::T
                                              : TransposeKind::Dj);
      break;
    }
    case 14: {
      require(c.n >= 1, "F14 needs n >= 1");
      sp.group = symplectic(f, c.n);
      sp.k1 = sp.k2 = (beta == 1) ? realified(unitary(Field::C, c.n))
                                  : complexified(unitary(Field::H, c.n));
      m.kind = MiddleKind::ExpDiagInvPair;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = sp.tau = Involution::neg_dual(cartan_dual(f));
      break;
    }
    case 15: {
      require(c.n >= 1, "F15 needs n >= 1");
      sp.group = symplectic(f, c.n);
      sp.k1 = (beta == 1) ? realified(unitary(Field::C, c.n))
                          : complexified(unitary(Field::H, c.n));
      sp.k2 = inv_transpose_pair(gl(f, c.n));
      m.kind = MiddleKind::CoshShPair;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = Involution::similarity(mat_Ipq<double>(c.n, c.n));
      break;
    }
    case 16: {
      require(c.p >= c.q && c.q >= 0 && c.p >= 1, "F16 needs p >= q >= 0, p >= 1");
      const int n = c.p + c.q;
      sp.group = symplectic(f, n);
      sp.k1 = (beta == 1) ? realified(unitary(Field::C, n))
                          : complexified(unitary(Field::H, n));
      sp.k2 = two_blocks_perm(symplectic(f, c.p), symplectic(f, c.q),
                              perm_Ppq(c.p, c.q));
      m.kind = MiddleKind::HypPairInvPair;
      m.dim = 2 * n;
      m.p = c.p;
      m.q = c.q;
      m.angle_count = c.q;
      sp.sigma = Involution::neg_dual(cartan_dual(f));
      sp.tau = Involution::similarity(block_diag(mat_Ipq<double>(c.p, c.q),
                                                 mat_Ipq<double>(c.p, c.q)));
      break;
    }
    case 17: {
      require(c.n >= 1, "F17 needs n >= 1");
      sp.group = symplectic(Field::C, c.n);
      sp.k1 = complexified(unitary(Field::H, c.n));
      sp.k2 = lifted(symplectic(Field::R, c.n));
      m.kind = MiddleKind::CoshEtaSh;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = Involution::neg_dual(TransposeKind::H);
      sp.tau = Involution::bar();
      break;
    }
    case 18: {
      require(c.p >= c.q && c.q >= 0 && c.p + c.q >= 1, "F18 needs p >= q >= 0, p+q >= 1");
      sp.group = indefinite(f, c.p, c.q);
      sp.k1 = sp.k2 = two_blocks(unitary(f, c.p), unitary(f, c.q));
      m.kind = MiddleKind::HypPair;
      m.dim = c.p + c.q;
      m.p = c.p;
      m.q = c.q;
      m.angle_count = c.q;
      sp.sigma = sp.tau = Involution::similarity(mat_Ipq<double>(c.p, c.q));
      break;
    }
    case 19: {
      require(c.p1 >= 0 && c.q1 >= 0 && c.p2 >= 0 && c.q2 >= 0,
              "F19 needs nonnegative p1,q1,p2,q2");
      const int p = c.p1 + c.p2, q = c.q1 + c.q2;
      require(p >= q && p + q >= 1, "F19 needs p1+p2 >= q1+q2 >= 0, nonempty");
      sp.group = indefinite(f, p, q);
      sp.k1 = two_blocks(unitary(f, p), unitary(f, q));
      sp.k2 = two_blocks_perm(indefinite(f, c.p1, c.q1),
                              indefinite(f, c.p2, c.q2),
                              perm_P1(c.p1, c.q1, c.p2, c.q2));
      const int m1 = std::min(c.p1, c.q2), m2 = std::min(c.p2, c.q1);
      m.kind = MiddleKind::HypSplit;
      m.dim = p + q;
      m.p1 = c.p1;
      m.q1 = c.q1;
      m.p2 = c.p2;
      m.q2 = c.q2;
      m.angle_count = m1 + m2;
      m.angle_split = {m1, m2};
      sp.sigma = Involution::similarity(mat_Ipq<double>(p, q));
      sp.tau = Involution::similarity(block_diag(mat_Ipq<double>(c.p1, c.p2),
                                                 mat_Ipq<double>(c.q1, c.q2)));
      break;
    }
    case 20: {
      require(c.p >= c.q && c.q >= 0 && c.p >= 1, "F20 needs p >= q >= 0, p >= 1");
      sp.group = indefinite(f, 2 * c.p, 2 * c.q);
      sp.k1 = two_blocks(unitary(f, 2 * c.p), unitary(f, 2 * c.q));
      sp.k2 = (beta == 1)
                  ? realified_perm(indefinite(Field::C, c.p, c.q),
                                   perm_Ppq(c.p, c.q))
                  : complexified_perm(indefinite(Field::H, c.p, c.q),
                                      perm_Ppq(c.p, c.q));
      m.kind = MiddleKind::HypInterleaved;
      m.dim = 2 * (c.p + c.q);
      m.p = c.p;
      m.q = c.q;
      m.angle_count = c.q;
      sp.sigma = Involution::similarity(mat_Ipq<double>(2 * c.p, 2 * c.q));
      sp.tau = Involution::similarity(
          block_diag(mat_J<double>(c.p), mat_J<double>(c.q)), beta == 2);
      break;
    }
    case 21: {
      require(c.n >= 1, "F21 needs n >= 1");
      sp.group = indefinite(f, c.n, c.n);
      sp.k1 = two_blocks(unitary(f, c.n), unitary(f, c.n));
      sp.k2 = (beta == 1) ? realified(complex_orth(c.n))
                          : complexified(quat_orth(c.n, Unit::i));
      m.kind = MiddleKind::CoshShPair;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = Involution::similarity(mat_Ipq<double>(c.n, c.n));
      sp.tau = Involution::similarity(mat_J<double>(c.n), beta == 2);
      break;
    }
    case 22: {
      require(c.p >= c.q && c.q >= 0 && c.p + c.q >= 1, "F22 needs p >= q >= 0, p+q >= 1");
      sp.group = indefinite(f, c.p, c.q);
      sp.k1 = two_blocks(unitary(f, c.p), unitary(f, c.q));
      sp.k2 = lifted(indefinite(sub_field(f), c.p, c.q));
      m.kind = MiddleKind::HypCorner;
      m.dim = c.p + c.q;
      m.p = c.p;
      m.q = c.q;
      m.eta = (beta == 2) ? Unit::i : Unit::j;
      m.angle_count = c.q;
      sp.sigma = Involution::similarity(mat_Ipq<double>(c.p, c.q));
      sp.tau = (beta == 2) ? Involution::bar() : Involution::unit(Unit::i);
      break;
    }
    case 23: {
      require(c.n >= 1, "F23 needs n >= 1");
      sp.group = (beta == 2) ? complex_orth(c.n) : quat_orth(c.n, Unit::i);
      sp.k1 = sp.k2 = lifted(unitary(sub_field(f), c.n));
      m.kind = MiddleKind::HypBlocks;
      m.dim = c.n;
      m.n = c.n;
      m.eta = (beta == 2) ? Unit::i : Unit::j;
      m.angle_count = c.n / 2;
      sp.sigma = sp.tau =
          (beta == 2) ? Involution::bar() : Involution::unit(Unit::i);
      break;
    }
    case 24: {
      require(c.p >= c.q && c.q >= 0 && c.p + c.q >= 1, "F24 needs p >= q >= 0, p+q >= 1");
      const int n = c.p + c.q;
      sp.group = (beta == 2) ? complex_orth(n) : quat_orth(n, Unit::i);
      sp.k1 = lifted(unitary(sub_field(f), n));
      sp.k2 = (beta == 2)
                  ? two_blocks(complex_orth(c.p), complex_orth(c.q))
                  : two_blocks(quat_orth(c.p, Unit::i), quat_orth(c.q, Unit::i));
      m.kind = MiddleKind::HypCorner;
      m.dim = n;
      m.p = c.p;
      m.q = c.q;
      m.eta = (beta == 2) ? Unit::i : Unit::j;
      m.angle_count = c.q;
      sp.sigma = (beta == 2) ? Involution::bar() : Involution::unit(Unit::i);
      sp.tau = Involution::similarity(mat_Ipq<double>(c.p, c.q));
      break;
    }
    case 25: {
      require(c.n >= 1, "F25 needs n >= 1");
      sp.group = complex_orth(2 * c.n);
      sp.k1 = lifted(unitary(Field::R, 2 * c.n));
      sp.k2 = complexified(quat_orth(c.n, Unit::j));
      m.kind = MiddleKind::CoshEtaSh;
      m.dim = 2 * c.n;
      m.n = c.n;
      m.angle_count = c.n;
      sp.sigma = Involution::bar();
      sp.tau = Involution::similarity(mat_J<double>(c.n), true);
      break;
    }
    default:
      throw std::invalid_argument("family must lie in 1..25");
  }
  sp.label = cell_name(sp.id) + " " + sp.group.name();
  return sp;
}

inline FactorizationSpec make_spec(const FactorizationId& id, const CaseParams& c) {
  return make_spec(id.family, id.beta, c);
}

// The sizes exercised by the default sweep.  Small enough that the whole
// 53-cell catalog runs in seconds, large enough that every template has a
// nontrivial identity block and at least two angles somewhere.
inline std::vector<CaseParams> default_cases(int family) {
  auto N = [](int n) { CaseParams c; c.n = n; return c; };
  auto PQ = [](int p, int q) { CaseParams c; c.p = p; c.q = q; return c; };
  auto PQRS = [](int p, int q, int r, int s) {
    CaseParams c; c.p = p; c.q = q; c.r = r; c.s = s; return c;
  };
  auto SPLIT = [](int p1, int q1, int p2, int q2) {
    CaseParams c; c.p1 = p1; c.q1 = q1; c.p2 = p2; c.q2 = q2; return c;
  };
  switch (family) {
    case 1: return {N(4), N(5)};
    case 2: return {N(2), N(3)};
    case 3: return {N(2), N(3)};
    case 4: return {PQRS(2, 2, 2, 2), PQRS(2, 2, 3, 1), PQRS(2, 1, 3, 0)};
    case 5: return {PQ(2, 2), PQ(3, 1)};
    case 6: return {PQ(1, 1), PQ(2, 1)};
    case 7: return {N(4), N(5)};
    case 8: return {PQ(2, 2), PQ(3, 1)};
    case 9: return {PQ(2, 2), PQ(3, 1)};
    case 10: return {N(2), N(3)};
    case 11: return {N(2), N(3)};
    case 12: return {N(4), N(5)};
    case 13: return {N(4), N(5)};
    case 14: return {N(2), N(3)};
    case 15: return {N(2), N(3)};
    case 16: return {PQ(2, 1), PQ(2, 2)};
    case 17: return {N(2), N(3)};
    case 18: return {PQ(2, 2), PQ(3, 1)};
    case 19: return {SPLIT(1, 1, 1, 1), SPLIT(2, 1, 1, 2), SPLIT(2, 0, 1, 1)};
    case 20: return {PQ(1, 1), PQ(2, 1)};
    case 21: return {N(2), N(3)};
    case 22: return {PQ(2, 2), PQ(3, 1)};
    case 23: return {N(4), N(5)};
    case 24: return {PQ(2, 2), PQ(3, 1)};
    case 25: return {N(2), N(3)};
    default: throw std::invalid_argument("family must lie in 1..25");
  }
}

// ---- embedded factor sampling and membership ------------------------------

inline Matrix<double> real_part_matrix(const Matrix<cd>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).real();
  return out;
}
inline Matrix<double> real_part_matrix(const Matrix<Quaternion>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = qw(m(i, j));
  return out;
}
inline Matrix<cd> complex_part_matrix(const Matrix<Quaternion>& m) {
  Matrix<cd> out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = q_apart(m(i, j));
  return out;
}

template <class T>
Matrix<T> sample_factor(const EmbedSpec& e, Rng& rng, double scale = 0.5) {
  switch (e.kind) {
    case EmbedKind::Direct:
      return sample_group<T>(e.parts[0], rng, scale);
    case EmbedKind::SubfieldLift: {
      if constexpr (std::is_same_v<T, cd>) {
        return lift<cd>(sample_group<double>(e.parts[0], rng, scale));
      } else if constexpr (std::is_same_v<T, Quaternion>) {
        if (e.parts[0].field == Field::C)
          return lift<Quaternion>(sample_group<cd>(e.parts[0], rng, scale));
        return lift<Quaternion>(sample_group<double>(e.parts[0], rng, scale));
      } else {
        throw std::logic_error("no subfield below the reals");
      }
    }
    case EmbedKind::BlockDiag:
    case EmbedKind::BlockDiagPerm: {
      Matrix<T> out = sample_group<T>(e.parts[0], rng, scale);
      for (size_t i = 1; i < e.parts.size(); ++i)
        out = block_diag(out, sample_group<T>(e.parts[i], rng, scale));
      if (e.kind == EmbedKind::BlockDiagPerm) {
        const Matrix<T> pm = lift<T>(e.perm);
        out = pm.transpose() * out * pm;
      }
      return out;
    }
    case EmbedKind::Realified:
    case EmbedKind::RealifiedPerm: {
      if constexpr (std::is_same_v<T, double>) {
        Matrix<double> out = realify(sample_group<cd>(e.parts[0], rng, scale));
        if (e.kind == EmbedKind::RealifiedPerm)
          out = e.perm * out * e.perm.transpose();
        return out;
      } else {
        throw std::logic_error("realified factors live in real matrices");
      }
    }
    case EmbedKind::Complexified:
    case EmbedKind::ComplexifiedPerm: {
      if constexpr (std::is_same_v<T, cd>) {
        Matrix<cd> out =
            complexify(sample_group<Quaternion>(e.parts[0], rng, scale));
        if (e.kind == EmbedKind::ComplexifiedPerm) {
          const Matrix<cd> pm = lift<cd>(e.perm);
          out = pm * out * pm.transpose();
        }
        return out;
      } else {
        throw std::logic_error("complexified factors live in complex matrices");
      }
    }
    case EmbedKind::InvTransposePair: {
      const Matrix<T> g = sample_group<T>(e.parts[0], rng, scale);
      return block_diag(g, inverse(g).transpose());
    }
  }
  throw std::logic_error("unreachable");
}

namespace detail {

// Norm of everything outside the diagonal blocks with the given sizes.
template <class T>
double off_block_residual(const Matrix<T>& k, const std::vector<int>& sizes) {
  Matrix<T> rest = k;
  int at = 0;
  for (int sz : sizes) {
    rest.set_block(at, at, Matrix<T>(sz, sz));
    at += sz;
  }
  return rest.norm_fro();
}

}  // namespace detail

// Distance from k to the embedded subgroup: structural residual (pattern /
// subfield / block shape) plus the membership residual of each un-embedded
// part.
template <class T>
double factor_residual(const EmbedSpec& e, const Matrix<T>& k) {
  switch (e.kind) {
    case EmbedKind::Direct:
      return membership_residual(e.parts[0], k);
    case EmbedKind::SubfieldLift: {
      double r = subfield_residual(k, e.parts[0].field);
      if constexpr (std::is_same_v<T, cd>) {
        r += membership_residual(e.parts[0], real_part_matrix(k));
      } else if constexpr (std::is_same_v<T, Quaternion>) {
        if (e.parts[0].field == Field::C)
          r += membership_residual(e.parts[0], complex_part_matrix(k));
        else
          r += membership_residual(e.parts[0], real_part_matrix(k));
      } else {
        throw std::logic_error("no subfield below the reals");
      }
      return r;
    }
    case EmbedKind::BlockDiag:
    case EmbedKind::BlockDiagPerm: {
      Matrix<T> kk = k;
      if (e.kind == EmbedKind::BlockDiagPerm) {
        const Matrix<T> pm = lift<T>(e.perm);
        kk = pm * k * pm.transpose();
      }
      std::vector<int> sizes;
      for (const GroupId& g : e.parts) sizes.push_back(g.size());
      double r = detail::off_block_residual(kk, sizes);
      int at = 0;
      for (size_t i = 0; i < e.parts.size(); ++i) {
        const int sz = sizes[i];
        r += membership_residual(e.parts[i], kk.block(at, at, sz, sz));
        at += sz;
      }
      return r;
    }
    case EmbedKind::Realified:
    case EmbedKind::RealifiedPerm: {
      if constexpr (std::is_same_v<T, double>) {
        Matrix<double> kk = k;
        if (e.kind == EmbedKind::RealifiedPerm)
          kk = e.perm.transpose() * k * e.perm;
        return realify_structure_residual(kk) +
               membership_residual(e.parts[0], derealify(kk));
      } else {
        throw std::logic_error("realified factors live in real matrices");
      }
    }
    case EmbedKind::Complexified:
    case EmbedKind::ComplexifiedPerm: {
      if constexpr (std::is_same_v<T, cd>) {
        Matrix<cd> kk = k;
        if (e.kind == EmbedKind::ComplexifiedPerm) {
          const Matrix<cd> pm = lift<cd>(e.perm);
          kk = pm.transpose() * k * pm;
        }
        return complexify_structure_residual(kk) +
               membership_residual(e.parts[0], decomplexify(kk));
      } else {
        throw std::logic_error("complexified factors live in complex matrices");
      }
    }
    case EmbedKind::InvTransposePair: {
      const int n = e.parts[0].size();
      double r = detail::off_block_residual(k, {n, n});
      const Matrix<T> a = k.block(0, 0, n, n);
      const Matrix<T> d = k.block(n, n, n, n);
      r += membership_residual(e.parts[0], a);
      r += diff_norm(d, inverse(a).transpose());
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

// ---- factored elements -----------------------------------------------------

template <class T>
struct FactoredElement {
  Matrix<T> k1, k2;
  std::vector<double> theta;
};

template <class T>
Matrix<T> compose(const FactorizationSpec& s, const FactoredElement<T>& fe) {
  return fe.k1 * middle_build<T>(s.middle, fe.theta) * fe.k2;
}

template <class T>
FactoredElement<T> sample_factored(const FactorizationSpec& s, Rng& rng,
                                   double scale = 0.5) {
  FactoredElement<T> fe;
  fe.k1 = sample_factor<T>(s.k1, rng, scale);
  fe.k2 = sample_factor<T>(s.k2, rng, scale);
  fe.theta = sample_angles(rng, s.middle.angle_count, s.middle.domain);
  return fe;
}

}  // namespace kak
