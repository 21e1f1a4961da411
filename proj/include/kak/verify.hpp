#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kak/decompose.hpp"
#include "kak/rng.hpp"

// Verification reports for factored elements, the spec-consistency property
// checks standing in for the symbolic derivation of (K1, A, K2), and the
// folding identity residuals.

namespace kak {

struct Thresholds {
  double membership = 1e-10;      // x n: ambient and factor membership
  double reconstruction = 1e-9;   // x n x max(1, ||reference||)
  double roundtrip_theta = 1e-8;  // absolute, after canonical reordering
  double invol = 1e-10;           // involution / automorphism residuals
  double algebra = 1e-12;         // generator membership and commutation
};

struct VerificationReport {
  std::string cell;
  std::string label;
  double reconstruction = 0.0;  // 0 when no reference element was supplied
  std::vector<std::pair<std::string, double>> factor_residuals;
  int angle_violations = 0;
  std::optional<double> roundtrip_theta;
  bool pass = false;
  uint64_t seed = 0;
  double elapsed_ms = 0.0;
};

// Residuals of a factored element against its spec: factor memberships, the
// composed element's ambient membership, angle-domain conformance, and --
// when a reference element / angle vector is supplied -- reconstruction and
// round-trip angle agreement.
template <class T>
VerificationReport verify_factored(const FactorizationSpec& sp, const FactoredElement<T>& fe,
                                   const Matrix<T>* reference = nullptr,
                                   const std::vector<double>* expected_theta = nullptr,
                                   const Thresholds& th = {}, uint64_t seed = 0) {
  const auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.cell = cell_name(sp.id);
  rep.label = sp.label;
  rep.seed = seed;
  const int n = sp.middle.dim;
  const Matrix<T> g = compose(sp, fe);
  rep.factor_residuals.emplace_back("K1", factor_residual(sp.k1, fe.k1));
  rep.factor_residuals.emplace_back("K2", factor_residual(sp.k2, fe.k2));
  rep.factor_residuals.emplace_back("G", membership_residual(sp.group, g));
  if (reference != nullptr)
    rep.reconstruction = diff_norm(g, *reference) / std::max(1.0, reference->norm_fro());
  rep.angle_violations = domain_violations(fe.theta, sp.middle.domain);
  if (expected_theta != nullptr)
    rep.roundtrip_theta = angle_distance(*expected_theta, fe.theta, sp.middle.angle_split);
  rep.pass = rep.angle_violations == 0 && rep.reconstruction <= th.reconstruction * n;
  for (const auto& [who, r] : rep.factor_residuals)
    if (r > th.membership * n) rep.pass = false;
  if (rep.roundtrip_theta && *rep.roundtrip_theta > th.roundtrip_theta) rep.pass = false;
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

inline std::string to_text(const VerificationReport& rep, const Thresholds& th = {}) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(3);
  os << "cell " << rep.label << "\n";
  os << "  seed             " << rep.seed << "\n";
  os << "  reconstruction   " << rep.reconstruction << "  (tol " << th.reconstruction
     << " x n)\n";
  for (const auto& [who, r] : rep.factor_residuals)
    os << "  " << who << " membership" << std::string(who.size() < 2 ? 5 : 4, ' ') << r
       << "  (tol " << th.membership << " x n)\n";
  os << "  angle violations " << rep.angle_violations << "\n";
  if (rep.roundtrip_theta)
    os << "  roundtrip theta  " << *rep.roundtrip_theta << "  (tol " << th.roundtrip_theta
       << ")\n";
  os << "  result           " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Spec-consistency checks: the registry hard-codes (K1, A, K2) per cell, and
// these properties certify the hard-coded answers in place of the symbolic
// derivation -- sigma/tau are involutive Lie-algebra automorphisms, the
// middle generators live in the (-1, -1) eigenspace of (sigma, tau), commute
// pairwise, and exponentiate into the group.

struct ConsistencyReport {
  std::string cell;
  std::string label;
  double involution = 0.0;      // sigma^2 = tau^2 = id on algebra and group samples
  double automorphism = 0.0;    // bracket compatibility on algebra samples
  double generator = 0.0;       // generators: algebra membership + anti-fixed by both
  double commutation = 0.0;     // [X_l, X_m] = 0
  bool pass = false;
};

namespace detail {

template <class T>
ConsistencyReport consistency_check_impl(const FactorizationSpec& sp, Rng& rng, int trials,
                                         const Thresholds& th) {
  ConsistencyReport rep;
  rep.cell = cell_name(sp.id);
  rep.label = sp.label;
  const auto bracket = [](const Matrix<T>& a, const Matrix<T>& b) { return a * b - b * a; };
  for (int t = 0; t < trials; ++t) {
    const Matrix<T> x = sample_algebra<T>(sp.group, rng);
    const Matrix<T> y = sample_algebra<T>(sp.group, rng);
    for (const Involution* inv : {&sp.sigma, &sp.tau}) {
      rep.involution = std::max(rep.involution, diff_norm(inv->algebra(inv->algebra(x)), x));
      rep.automorphism =
          std::max(rep.automorphism,
                   diff_norm(inv->algebra(bracket(x, y)), bracket(inv->algebra(x), inv->algebra(y))));
    }
    const Matrix<T> k1 = sample_factor<T>(sp.k1, rng);
    const Matrix<T> k2 = sample_factor<T>(sp.k2, rng);
    rep.involution = std::max(rep.involution, diff_norm(sp.sigma.group(sp.sigma.group(k1)), k1));
    rep.involution = std::max(rep.involution, diff_norm(sp.tau.group(sp.tau.group(k2)), k2));
  }
  std::vector<Matrix<T>> gen;
  gen.reserve(sp.middle.angle_count);
  for (int l = 0; l < sp.middle.angle_count; ++l)
    gen.push_back(middle_generator<T>(sp.middle, l));
  for (const Matrix<T>& xl : gen) {
    rep.generator = std::max(rep.generator, algebra_residual(sp.group, xl));
    rep.generator = std::max(rep.generator, (sp.sigma.algebra(xl) + xl).norm_fro());
    rep.generator = std::max(rep.generator, (sp.tau.algebra(xl) + xl).norm_fro());
  }
  for (size_t l = 0; l < gen.size(); ++l)
    for (size_t m = l + 1; m < gen.size(); ++m)
      rep.commutation = std::max(rep.commutation, bracket(gen[l], gen[m]).norm_fro());
  rep.pass = rep.involution <= th.invol && rep.automorphism <= th.invol &&
             rep.generator <= th.algebra && rep.commutation <= th.algebra;
  return rep;
}

}  // namespace detail

inline ConsistencyReport consistency_check(const FactorizationSpec& sp, uint64_t seed,
                                           int trials = 3, const Thresholds& th = {}) {
  Rng rng(seed);
  switch (sp.field) {
    case Field::R: return detail::consistency_check_impl<double>(sp, rng, trials, th);
    case Field::C: return detail::consistency_check_impl<cd>(sp, rng, trials, th);
    case Field::H: return detail::consistency_check_impl<Quaternion>(sp, rng, trials, th);
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Folding identities: the folded element must equal the conjugated doubled
// middle, k1 a(2 theta) tau(k1)^{-1} on the right, sigma(k2)^{-1} a(2 theta) k2
// on the left.

template <class T>
double fold_identity_residual(const FactorizationSpec& sp, const FactoredElement<T>& fe,
                              FoldSide side) {
  const FoldResult<T> fr = fold(sp, fe, side);
  if (side == FoldSide::Right)
    return diff_norm(fr.folded, fr.conjugator * fr.middle * inverse(sp.tau.group(fr.conjugator)));
  return diff_norm(fr.folded, inverse(sp.sigma.group(fr.conjugator)) * fr.middle * fr.conjugator);
}

}  // namespace kak
