// Acceptance gate: thirteen pinned criteria covering catalog completeness,
// compose-verify, spec consistency, decomposition round-trips, the named
// oracle identities, folding, beta-doubling, the structure-map identities,
// structured SVDs, and sweep determinism.  One PASS/FAIL line per criterion
// with the worst observed residuals; exit code 0 only if all thirteen pass.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "kak/kak.hpp"

using namespace kak;

namespace {

std::string fmt(const char* f, ...) {
  char buf[256];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

struct Gate {
  int next = 1;
  bool all_pass = true;
  void report(const char* name, bool pass, const std::string& detail) {
    std::printf("[%2d] %s  %-52s %s\n", next++, pass ? "PASS" : "FAIL", name, detail.c_str());
    all_pass = all_pass && pass;
  }
};

template <class F>
void with_field(Field f, F&& fn) {
  switch (f) {
    case Field::R: fn.template operator()<double>(); break;
    case Field::C: fn.template operator()<cd>(); break;
    case Field::H: fn.template operator()<Quaternion>(); break;
  }
}

// --------------------------------------------------------------------------
// 1. Catalog completeness against the published 25 x beta table.

void c1_catalog(Gate& gate) {
  const std::map<int, std::set<int>> want = {
      {1, {2, 4}},     {2, {1, 2}},     {3, {2}},        {4, {1, 2, 4}},  {5, {2, 4}},
      {6, {1, 2}},     {7, {1, 2, 4}},  {8, {1, 2, 4}},  {9, {1, 2, 4}},  {10, {1, 2}},
      {11, {1, 2}},    {12, {2, 4}},    {13, {2, 4}},    {14, {1, 2}},    {15, {1, 2}},
      {16, {1, 2}},    {17, {2}},       {18, {1, 2, 4}}, {19, {1, 2, 4}}, {20, {1, 2}},
      {21, {1, 2}},    {22, {2, 4}},    {23, {2, 4}},    {24, {2, 4}},    {25, {2}},
  };
  std::map<int, std::set<int>> got;
  size_t total = 0;
  for (const FactorizationId& id : catalog()) {
    got[id.family].insert(id.beta);
    ++total;
  }
  const bool pass = total == 53 && got == want;
  gate.report("catalog completeness (53 cells, Table-1 pattern)", pass,
              fmt("%zu cells enumerated", total));
}

// --------------------------------------------------------------------------
// 2. Compose-verify: >= 50 seeded trials per cell at n <= 8 over partitions
//    covering p = q, p > q, and s = 0; ambient and factor membership at
//    1e-10 * n.

void c2_compose(Gate& gate) {
  double worst = 0.0;
  int cells_pass = 0, min_trials = 1 << 30;
  for (const FactorizationId& id : catalog()) {
    std::vector<FactorizationSpec> specs;
    for (int n = 2; n <= 8; ++n)
      for (const CaseParams& c : detail::cases_for(id.family, n)) {
        try {
          specs.push_back(make_spec(id, c));
        } catch (const std::invalid_argument&) {
        }
      }
    bool cell_ok = !specs.empty();
    const int per_case =
        specs.empty() ? 0 : std::max(1, static_cast<int>((50 + specs.size() - 1) / specs.size()));
    int trials = 0;
    for (size_t ci = 0; ci < specs.size(); ++ci) {
      const FactorizationSpec& sp = specs[ci];
      with_field(sp.field, [&]<class T>() {
        Rng rng(mix_seed(202u, id.family * 10 + id.beta, static_cast<uint64_t>(ci)));
        for (int t = 0; t < per_case; ++t) {
          const auto fe = sample_factored<T>(sp, rng);
          const double bound = 1e-10 * sp.middle.dim;
          const double r = std::max({factor_residual(sp.k1, fe.k1), factor_residual(sp.k2, fe.k2),
                                     membership_residual(sp.group, compose(sp, fe))});
          worst = std::max(worst, r);
          if (r > bound) cell_ok = false;
          ++trials;
        }
      });
    }
    min_trials = std::min(min_trials, trials);
    cells_pass += cell_ok ? 1 : 0;
  }
  gate.report("compose-verify all cells (>=50 trials, n<=8)", cells_pass == 53,
              fmt("%d/53 cells, >=%d trials each, worst membership %.2e (bound 1e-10*n)",
                  cells_pass, min_trials, worst));
}

// --------------------------------------------------------------------------
// 3. Spec consistency: involution/automorphism at 1e-10, middle generators in
//    the simultaneous (-1)-eigenspace at 1e-12, pairwise commutation at 1e-12.

void c3_consistency(Gate& gate) {
  double worst_invol = 0.0, worst_gen = 0.0;
  int cells_pass = 0;
  for (const FactorizationId& id : catalog()) {
    bool ok = true;
    for (const CaseParams& c : default_cases(id.family)) {
      const auto rep = consistency_check(make_spec(id, c), mix_seed(303u, id.family, id.beta), 3);
      worst_invol = std::max({worst_invol, rep.involution, rep.automorphism});
      worst_gen = std::max({worst_gen, rep.generator, rep.commutation});
      ok = ok && rep.involution <= 1e-10 && rep.automorphism <= 1e-10 &&
           rep.generator <= 1e-12 && rep.commutation <= 1e-12;
    }
    cells_pass += ok ? 1 : 0;
  }
  gate.report("involution/automorphism + generator flats", cells_pass == 53,
              fmt("%d/53 cells, worst involution %.2e, worst generator %.2e", cells_pass,
                  worst_invol, worst_gen));
}

// --------------------------------------------------------------------------
// 4. Decomposition round-trips on the twelve implemented routes.

void c4_roundtrips(Gate& gate) {
  const auto N = [](int n) { CaseParams c; c.n = n; return c; };
  const auto PQ = [](int p, int q) { CaseParams c; c.p = p; c.q = q; return c; };
  const auto PQRS = [](int p, int q, int r, int s) {
    CaseParams c; c.p = p; c.q = q; c.r = r; c.s = s; return c;
  };
  struct Route {
    int family, beta;
    std::vector<CaseParams> cases;
  };
  const std::vector<CaseParams> f4_cases = {PQRS(2, 2, 2, 2), PQRS(3, 2, 3, 2), PQRS(2, 2, 3, 1),
                                            PQRS(3, 1, 3, 1), PQRS(2, 1, 3, 0), PQRS(4, 3, 4, 3)};
  const std::vector<CaseParams> pq_cases = {PQ(2, 2), PQ(3, 1), PQ(4, 3), PQ(4, 4)};
  const std::vector<Route> routes = {
      {1, 2, {N(3), N(5), N(8)}},
      {4, 1, f4_cases},
      {4, 2, f4_cases},
      {7, 1, {N(3), N(5), N(8)}},
      {7, 2, {N(3), N(5), N(8)}},
      {7, 4, {N(2), N(3), N(4)}},
      {9, 1, pq_cases},
      {9, 2, pq_cases},
      {10, 1, {N(2), N(3), N(4)}},
      {13, 2, {N(3), N(5), N(8)}},
      {18, 1, pq_cases},
      {18, 2, pq_cases},
  };
  double worst_theta = 0.0, worst_recon = 0.0;
  int routes_pass = 0;
  for (const Route& route : routes) {
    bool ok = true;
    Rng rng(mix_seed(404u, route.family, route.beta));
    for (int t = 0; t < 50; ++t) {
      const auto sp = make_spec(route.family, route.beta, route.cases[t % route.cases.size()]);
      with_field(sp.field, [&]<class T>() {
        const auto ref = sample_factored<T>(sp, rng);
        const Matrix<T> g = compose(sp, ref);
        const auto fe = decompose(sp, g);
        const double dtheta = angle_distance(ref.theta, fe.theta, sp.middle.angle_split);
        const double recon =
            diff_norm(compose(sp, fe), g) / (sp.middle.dim * std::max(1.0, g.norm_fro()));
        worst_theta = std::max(worst_theta, dtheta);
        worst_recon = std::max(worst_recon, recon);
        ok = ok && dtheta <= 1e-8 && recon <= 1e-9;
      });
    }
    routes_pass += ok ? 1 : 0;
  }
  gate.report("decomposition round-trips (12 routes x 50 trials)", routes_pass == 12,
              fmt("%d/12 routes, worst theta %.2e (1e-8), worst recon %.2e (1e-9*n*|g|)",
                  routes_pass, worst_theta, worst_recon));
}

// --------------------------------------------------------------------------
// 5. Phase separation: Re(U) = O1 C O2 and Im(U) = O1 S O2 from the F1 route.

void c5_separation(Gate& gate) {
  double worst = 0.0;
  bool ok = true;
  Rng rng(505);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 7;
    const Matrix<cd> u = sample_group<cd>(detail::unitary(Field::C, n), rng);
    const auto fe = odo(u);
    Matrix<double> o1(n, n), o2(n, n), cmat(n, n), smat(n, n), re(n, n), im(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        o1(i, j) = fe.k1(i, j).real();
        o2(i, j) = fe.k2(i, j).real();
        re(i, j) = u(i, j).real();
        im(i, j) = u(i, j).imag();
      }
    for (int l = 0; l < n; ++l) {
      cmat(l, l) = std::cos(fe.theta[l]);
      smat(l, l) = std::sin(fe.theta[l]);
    }
    const double r = diff_norm(re, o1 * cmat * o2) + diff_norm(im, o1 * smat * o2);
    worst = std::max(worst, r);
    ok = ok && r <= 1e-9 * n;
  }
  gate.report("phase separation Re/Im(U) = O1 {C,S} O2", ok,
              fmt("worst %.2e (bound 1e-9*n)", worst));
}

// --------------------------------------------------------------------------
// 6. Takagi: reconstruction at 1e-9*n*|A| and lambda against the SVD oracle.

void c6_takagi(Gate& gate) {
  double worst_recon = 0.0, worst_lambda = 0.0;
  bool ok = true;
  Rng rng(606);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + t % 8;
    Matrix<cd> a;
    if (t % 5 == 4) {
      // Engineered singular-value cluster.
      const auto q = sample_group<cd>(detail::unitary(Field::C, n), rng);
      Matrix<cd> d(n, n);
      for (int i = 0; i < n; ++i) d(i, i) = cd(i < (n + 1) / 2 ? 2.0 : 0.5, 0.0);
      a = q * d * q.conj_transpose(TransposeKind::T);
    } else {
      const auto b = rng.gauss_matrix<cd>(n, n);
      a = b + b.conj_transpose(TransposeKind::T);
    }
    const auto tk = takagi(a);
    const double recon =
        diff_norm(tk.u * diag_from<cd>(tk.lambda) * tk.u.conj_transpose(TransposeKind::T), a) /
        (n * std::max(1.0, a.norm_fro()));
    worst_recon = std::max(worst_recon, recon);
    const auto sv = svd(a);
    for (int l = 0; l < n; ++l)
      worst_lambda = std::max(worst_lambda, std::abs(tk.lambda[l] - sv.sigma[l]));
    ok = ok && recon <= 1e-9 && worst_lambda <= 1e-8;
  }
  gate.report("Takagi reconstruction + singular-value oracle", ok,
              fmt("worst recon %.2e (1e-9*n*|A|), worst lambda gap %.2e (1e-8)", worst_recon,
                  worst_lambda));
}

// --------------------------------------------------------------------------
// 7. Williamson: diagonalization, |eig(JA)| oracle, congruence invariance.

void c7_williamson(Gate& gate) {
  double worst_diag = 0.0, worst_eig = 0.0, worst_inv = 0.0;
  bool ok = true;
  Rng rng(707);
  for (int t = 0; t < 25; ++t) {
    const int n = 1 + t % 4;
    const auto b = rng.gauss_matrix<double>(2 * n, 2 * n);
    const Matrix<double> a = b * b.conj_transpose(TransposeKind::T) +
                             Matrix<double>::identity(2 * n).scaled(0.5);
    const auto w = williamson(a);
    Matrix<double> d(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) d(i, i) = d(n + i, n + i) = w.sigma[i];
    const double rdiag =
        diff_norm(w.s * a * w.s.conj_transpose(TransposeKind::T), d) / std::max(1.0, a.norm_fro());
    worst_diag = std::max(worst_diag, rdiag);
    // Oracle: moduli of eig(J A) list every symplectic eigenvalue twice.
    Matrix<cd> ja(2 * n, 2 * n);
    const Matrix<double> jam = mat_J<double>(n) * a;
    for (int i = 0; i < 2 * n; ++i)
      for (int j = 0; j < 2 * n; ++j) ja(i, j) = cd(jam(i, j), 0.0);
    std::vector<double> mods;
    for (const cd& z : eig_values(ja)) mods.push_back(std::abs(z));
    std::sort(mods.begin(), mods.end(), std::greater<double>());
    for (int i = 0; i < n; ++i)
      worst_eig = std::max(worst_eig, std::abs(w.sigma[i] - mods[2 * i]));
    // Invariance under a symplectic congruence.
    const auto m = sample_group<double>(detail::symplectic(Field::R, n), rng);
    const auto moved = williamson(m * a * m.conj_transpose(TransposeKind::T));
    for (int i = 0; i < n; ++i)
      worst_inv = std::max(worst_inv, std::abs(w.sigma[i] - moved.sigma[i]));
    ok = ok && rdiag <= 1e-8 && worst_eig <= 1e-8 && worst_inv <= 1e-8;
  }
  gate.report("Williamson normal form + invariance", ok,
              fmt("worst diag %.2e, eig oracle %.2e, congruence %.2e (1e-8)", worst_diag,
                  worst_eig, worst_inv));
}

// --------------------------------------------------------------------------
// 8. Nonsquare SVD against the direct SVD oracle for 5x3 and 4x4 inputs.

void c8_nonsquare(Gate& gate) {
  double worst = 0.0;
  bool ok = true;
  Rng rng(808);
  for (int t = 0; t < 20; ++t) {
    const int p = t % 2 == 0 ? 5 : 4, q = t % 2 == 0 ? 3 : 4;
    const Matrix<double> x = rng.gauss_matrix<double>(p, q);
    const auto r = nonsquare_svd(x);
    const auto sv = svd(x);
    for (size_t l = 0; l < sv.sigma.size(); ++l)
      worst = std::max(worst, std::abs(r.sh[l] - sv.sigma[l]));
    Matrix<double> mid(p, q);
    for (int l = 0; l < q; ++l) mid(l, l) = r.sh[l];
    ok = ok && worst <= 1e-8 &&
         diff_norm(r.u * mid * r.v.conj_transpose(TransposeKind::T), x) <= 1e-8 * x.norm_fro();
  }
  gate.report("nonsquare SVD via hyperbolic CSD (5x3, 4x4)", ok,
              fmt("worst sigma gap %.2e (bound 1e-8)", worst));
}

// --------------------------------------------------------------------------
// 9. Folding identities, both sides, all 53 cells.

void c9_folding(Gate& gate) {
  double worst = 0.0;
  int cells_pass = 0;
  for (const FactorizationId& id : catalog()) {
    bool ok = true;
    for (const CaseParams& c : default_cases(id.family)) {
      const auto sp = make_spec(id, c);
      with_field(sp.field, [&]<class T>() {
        Rng rng(mix_seed(909u, id.family, id.beta, static_cast<uint64_t>(c.n + c.p + c.p1)));
        for (int t = 0; t < 3; ++t) {
          const auto fe = sample_factored<T>(sp, rng);
          const Matrix<T> g = compose(sp, fe);
          const double bound = 1e-9 * g.norm_fro() * g.norm_fro();
          for (FoldSide side : {FoldSide::Left, FoldSide::Right}) {
            const double r = fold_identity_residual(sp, fe, side);
            worst = std::max(worst, r / std::max(1.0, g.norm_fro() * g.norm_fro()));
            ok = ok && r <= bound;
          }
        }
      });
    }
    cells_pass += ok ? 1 : 0;
  }
  gate.report("folding identities, left + right, all cells", cells_pass == 53,
              fmt("%d/53 cells, worst residual %.2e x |g|^2 (bound 1e-9)", cells_pass, worst));
}

// --------------------------------------------------------------------------
// 10. Beta-doubling memberships: realified U(n) in O(2n) and Sp(2n, R);
//     complexified U(n, H) in U(2n) and Sp(2n, C).

void c10_doubling(Gate& gate) {
  double worst = 0.0;
  bool ok = true;
  Rng rng(1010);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 5;
    const Matrix<double> r = realify(sample_group<cd>(detail::unitary(Field::C, n), rng));
    const double r1 = membership_residual(detail::unitary(Field::R, 2 * n), r);
    const double r2 = membership_residual(detail::symplectic(Field::R, n), r);
    worst = std::max({worst, r1, r2});
    ok = ok && r1 <= 1e-10 * 2 * n && r2 <= 1e-10 * 2 * n;
  }
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + t % 5;
    const Matrix<cd> c = complexify(sample_group<Quaternion>(detail::unitary(Field::H, n), rng));
    const double r1 = membership_residual(detail::unitary(Field::C, 2 * n), c);
    const double r2 = membership_residual(detail::symplectic(Field::C, n), c);
    worst = std::max({worst, r1, r2});
    ok = ok && r1 <= 1e-10 * 2 * n && r2 <= 1e-10 * 2 * n;
  }
  gate.report("beta-doubling memberships (100 + 100 samples)", ok,
              fmt("worst %.2e (bound 1e-10*n)", worst));
}

// --------------------------------------------------------------------------
// 11. The six structure-map identities at 10 eps, 1000 random 4x4 trials.

void c11_identities(Gate& gate) {
  const double eps = std::numeric_limits<double>::epsilon();
  double worst = 0.0;  // residual / (eps * max(1, norm))
  bool ok = true;
  Rng rng(1111);
  const int n = 4;
  const Matrix<double> inn = mat_Ipq<double>(n, n);
  const Matrix<double> jn = mat_J<double>(n);
  const Matrix<cd> jc = mat_J<cd>(n);
  for (int t = 0; t < 1000; ++t) {
    const auto c = rng.gauss_matrix<cd>(n, n);
    const auto q = rng.gauss_matrix<Quaternion>(n, n);
    const double sc = std::max(1.0, c.norm_fro());
    const double sq = std::max(1.0, q.norm_fro());
    const auto rc = realify(c);
    const auto cq = complexify(q);
    const double res[6] = {
        diff_norm(realify(c.conj_transpose(TransposeKind::H)),
                  rc.conj_transpose(TransposeKind::T)) / sc,
        diff_norm(realify(c.conj_transpose(TransposeKind::T)),
                  inn * rc.conj_transpose(TransposeKind::T) * inn) / sc,
        diff_norm(complexify(q.conj_transpose(TransposeKind::D)),
                  cq.conj_transpose(TransposeKind::H)) / sq,
        std::max(diff_norm(complexify(q.conj_transpose(TransposeKind::Dj)),
                           cq.conj_transpose(TransposeKind::T)),
                 diff_norm(complexify(q.conj_transpose(TransposeKind::Dj)),
                           (jc * cq.conj_transpose(TransposeKind::H) * jc).scaled(-1.0))) / sq,
        diff_norm((jn * rc * jn).scaled(-1.0), rc) / sc,
        diff_norm((jc * cq.conj() * jc).scaled(-1.0), cq) / sq,
    };
    for (double r : res) {
      worst = std::max(worst, r / eps);
      ok = ok && r <= 10.0 * eps;
    }
  }
  gate.report("six structure-map identities (1000 x 4x4)", ok,
              fmt("worst %.2f eps (bound 10 eps)", worst));
}

// --------------------------------------------------------------------------
// 12. Structured SVDs: factor memberships at 1e-9*n, palindromic diagonal.

void c12_structured(Gate& gate) {
  double worst_mem = 0.0, worst_pal = 0.0;
  bool ok = true;
  Rng rng(1212);
  for (int n = 2; n <= 8; ++n) {  // real perplectic
    const auto g = sample_group<double>(detail::indefinite(Field::R, (n + 1) / 2, n / 2), rng);
    const auto sv =
        perplectic_svd(structure_isomorphism(IsoKind::RealPerplectic, g, IsoDirection::Forward));
    const double mem =
        std::max(detail::perplectic_residual(sv.u), detail::perplectic_residual(sv.v));
    worst_mem = std::max(worst_mem, mem);
    ok = ok && mem <= 1e-9 * n;
    for (int l = 0; l < n; ++l)
      worst_pal = std::max(worst_pal, std::abs(sv.sigma[l] * sv.sigma[n - 1 - l] - 1.0));
    for (int l = 0; l + 1 < n / 2; ++l) ok = ok && sv.sigma[l] >= sv.sigma[l + 1] - 1e-8;
  }
  for (int n = 1; n <= 6; ++n) {  // complex perplectic
    const auto g = sample_group<cd>(detail::complex_orth(n), rng);
    const auto sv = perplectic_svd(
        structure_isomorphism(IsoKind::ComplexPerplectic, g, IsoDirection::Forward));
    const double mem =
        std::max(detail::perplectic_residual(sv.u), detail::perplectic_residual(sv.v));
    worst_mem = std::max(worst_mem, mem);
    ok = ok && mem <= 1e-9 * n;
    for (int l = 0; l < n; ++l)
      worst_pal = std::max(worst_pal, std::abs(sv.sigma[l] * sv.sigma[n - 1 - l] - 1.0));
  }
  for (int n = 1; n <= 4; ++n) {  // conjugate symplectic
    const auto g = sample_group<cd>(detail::indefinite(Field::C, n, n), rng);
    const auto sv = conj_symplectic_svd(
        structure_isomorphism(IsoKind::ConjugateSymplectic, g, IsoDirection::Forward));
    const double mem =
        std::max(detail::conj_symplectic_residual(sv.u), detail::conj_symplectic_residual(sv.v));
    worst_mem = std::max(worst_mem, mem);
    ok = ok && mem <= 1e-9 * 2 * n;
    for (int l = 0; l < n; ++l)
      worst_pal = std::max(worst_pal, std::abs(sv.sigma[l] * sv.sigma[n + l] - 1.0));
  }
  ok = ok && worst_pal <= 1e-8;
  gate.report("structured SVD memberships + palindromic sigma", ok,
              fmt("worst membership %.2e (1e-9*n), worst pairing %.2e (1e-8)", worst_mem,
                  worst_pal));
}

// --------------------------------------------------------------------------
// 13. Sweep determinism: identical configs give byte-identical reports.

void c13_determinism(Gate& gate) {
  SweepConfig cfg;
  cfg.sizes = {2, 3, 4};
  cfg.trials = 3;
  cfg.seed = 1313;
  const std::string a = to_text(sweep(cfg));
  const std::string b = to_text(sweep(cfg));
  SweepConfig serial = cfg;
  serial.threads = 1;
  const std::string c = to_text(sweep(serial));
  const bool pass = a == b && a == c && a.find("cells passing: 53/53") != std::string::npos;
  gate.report("sweep determinism (byte-identical reports)", pass,
              fmt("%zu-byte report, parallel/serial identical: %s", a.size(),
                  (a == b && a == c) ? "yes" : "NO"));
}

}  // namespace

int main() {
  Gate gate;
  std::printf("acceptance gate: 13 criteria\n\n");
  c1_catalog(gate);
  c2_compose(gate);
  c3_consistency(gate);
  c4_roundtrips(gate);
  c5_separation(gate);
  c6_takagi(gate);
  c7_williamson(gate);
  c8_nonsquare(gate);
  c9_folding(gate);
  c10_doubling(gate);
  c11_identities(gate);
  c12_structured(gate);
  c13_determinism(gate);
  std::printf("\n%s\n", gate.all_pass ? "acceptance: all 13 criteria PASS"
                                      : "acceptance: FAILURES PRESENT");
  return gate.all_pass ? 0 : 1;
}
