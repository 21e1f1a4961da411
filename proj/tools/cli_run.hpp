#pragma once

// Command-line driver.  The whole implementation lives in run() so the test
// suite can invoke commands in-process and capture their streams; main() in
// cli.cpp only forwards argv.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage / parse error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kak/kak.hpp"

namespace kak::cli {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

namespace detail {

inline const char* middle_kind_name(MiddleKind k) {
  switch (k) {
    case MiddleKind::PhaseDiag: return "phase-diag";
    case MiddleKind::RotDouble: return "rot-double";
    case MiddleKind::PhaseDiagDouble: return "phase-diag-double";
    case MiddleKind::CsPair: return "cs-pair";
    case MiddleKind::CsCorner: return "cs-corner";
    case MiddleKind::CsKron: return "cs-kron";
    case MiddleKind::ExpDiag: return "exp-diag";
    case MiddleKind::HypPair: return "hyp-pair";
    case MiddleKind::ExpDiagDouble: return "exp-diag-double";
    case MiddleKind::ExpDiagInvPair: return "exp-diag-invpair";
    case MiddleKind::HypBlocks: return "hyp-blocks";
    case MiddleKind::CoshShPair: return "cosh-sh-pair";
    case MiddleKind::HypPairInvPair: return "hyp-pair-invpair";
    case MiddleKind::CoshEtaSh: return "cosh-eta-sh";
    case MiddleKind::HypSplit: return "hyp-split";
    case MiddleKind::HypInterleaved: return "hyp-interleaved";
    case MiddleKind::HypCorner: return "hyp-corner";
  }
  return "?";
}

inline const char* shape_tokens(ParamShape s) {
  switch (s) {
    case ParamShape::N: return "n";
    case ParamShape::PQ: return "p,q";
    case ParamShape::PQRS: return "p,q,r,s";
    case ParamShape::Split: return "p1,q1,p2,q2";
  }
  return "?";
}

// Resolve "--fact F9b1" or "--fact F9 --beta 1" to a catalog cell.
inline FactorizationId resolve_cell(const std::string& fact, int beta) {
  if (fact.find_first_of("b:") != std::string::npos) {
    const auto id = parse_cell(fact);
    if (!id) throw std::invalid_argument("unknown cell \"" + fact + "\"");
    if (beta != 0 && beta != id->beta)
      throw std::invalid_argument("--beta contradicts the cell named by --fact");
    return *id;
  }
  std::string t = fact;
  if (!t.empty() && (t[0] == 'F' || t[0] == 'f')) t.erase(0, 1);
  int family = 0;
  try {
    family = std::stoi(t);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse \"" + fact + "\" as a family (use F1..F25)");
  }
  if (beta == 0) throw std::invalid_argument("--beta is required when --fact names only a family");
  const auto& betas = betas_for(family);
  if (std::find(betas.begin(), betas.end(), beta) == betas.end())
    throw std::invalid_argument("family F" + std::to_string(family) + " has no beta=" +
                                std::to_string(beta) + " variant");
  return {family, beta};
}

template <class F>
auto with_field(Field f, F&& fn) {
  switch (f) {
    case Field::R: return fn.template operator()<double>();
    case Field::C: return fn.template operator()<cd>();
    default: return fn.template operator()<Quaternion>();
  }
}

inline std::string format_g(double v) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Construct, sample, decompose, fold, and verify elements of the 53 "
               "classical-group factorization cells."};
  app.require_subcommand(1);

  std::string fact, in_path, out_path, report_path, csv_path, side = "right";
  int beta = 0;
  CaseParams prm;
  uint64_t seed = 1;
  double scale = 0.5, tol = 0.0;
  int max_n = 6, trials = 10, threads = 0;
  std::vector<std::string> filter;

  const auto add_cell_flags = [&](CLI::App* sub) {
    sub->add_option("--fact", fact, "cell (F9b1) or family (F9)")->required();
    sub->add_option("--beta", beta, "base field: 1 real, 2 complex, 4 quaternion");
    sub->add_option("--n", prm.n, "size parameter");
    sub->add_option("--p", prm.p, "signature / partition parameter");
    sub->add_option("--q", prm.q, "signature / partition parameter");
    sub->add_option("--r", prm.r, "second partition parameter (F4)");
    sub->add_option("--s", prm.s, "second partition parameter (F4)");
    sub->add_option("--p1", prm.p1, "split signature parameter (F19)");
    sub->add_option("--q1", prm.q1, "split signature parameter (F19)");
    sub->add_option("--p2", prm.p2, "split signature parameter (F19)");
    sub->add_option("--q2", prm.q2, "split signature parameter (F19)");
  };
  const auto shape_given = [&](CLI::App* sub) {
    for (const char* f : {"--n", "--p", "--q", "--r", "--s", "--p1", "--q1", "--p2", "--q2"})
      if (sub->count(f) > 0) return true;
    return false;
  };
  const auto resolve_spec = [&](CLI::App* sub) {
    const FactorizationId id = detail::resolve_cell(fact, beta);
    return make_spec(id, shape_given(sub) ? prm : default_cases(id.family).front());
  };
  const auto thresholds = [&]() {
    Thresholds th;
    if (tol > 0.0) {
      th.membership = tol;
      th.reconstruction = tol;
      th.roundtrip_theta = tol;
    }
    return th;
  };

  CLI::App* list = app.add_subcommand("list", "print the 53 catalog cells");

  CLI::App* sample = app.add_subcommand("sample", "sample a group element of a cell");
  add_cell_flags(sample);
  sample->add_option("--seed", seed, "random seed");
  sample->add_option("--scale", scale, "sampler scale");
  sample->add_option("--out", out_path, "matrix file to write (stdout when omitted)");

  CLI::App* decomp = app.add_subcommand("decompose", "factor a group element read from a file");
  add_cell_flags(decomp);
  decomp->add_option("--in", in_path, "matrix file holding the element")->required();
  decomp->add_option("--out", out_path, "directory for k1/k2/middle/theta matrices");
  decomp->add_option("--tol", tol, "threshold override");

  CLI::App* verify = app.add_subcommand("verify", "verify a group element read from a file");
  add_cell_flags(verify);
  verify->add_option("--in", in_path, "matrix file holding the element")->required();
  verify->add_option("--tol", tol, "threshold override");

  CLI::App* fold_cmd = app.add_subcommand("fold", "fold an element into its symmetric-space form");
  add_cell_flags(fold_cmd);
  fold_cmd->add_option("--side", side, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  fold_cmd->add_option("--in", in_path, "element to decompose and fold (cells with a route)");
  fold_cmd->add_option("--seed", seed, "seed for the sampled element when --in is omitted");
  fold_cmd->add_option("--scale", scale, "sampler scale");
  fold_cmd->add_option("--tol", tol, "fold-identity threshold override (x ||g||^2)");
  fold_cmd->add_option("--out", out_path, "matrix file for the folded element");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run the full-registry verification sweep");
  sweep_cmd->add_option("--max-n", max_n, "largest size to exercise (sizes 2..max-n)")
      ->check(CLI::Range(2, 16));
  sweep_cmd->add_option("--trials", trials, "compose-verify trials per case")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", seed, "sweep seed");
  sweep_cmd->add_option("--scale", scale, "sampler scale");
  sweep_cmd->add_option("--filter", filter, "cells or families, e.g. F1,F9b1")
      ->delimiter(',');
  sweep_cmd->add_option("--report", report_path, "text report destination (stdout when omitted)");
  sweep_cmd->add_option("--csv", csv_path, "CSV summary destination");
  sweep_cmd->add_option("--tol", tol, "membership/reconstruction threshold override");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("kakcli");
  for (std::string& a : args) full.push_back(std::move(a));
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (list->parsed()) {
      out << "cell    group           params       middle             angles    route\n";
      for (const FactorizationId& id : catalog()) {
        const FactorizationSpec sp = make_spec(id, default_cases(id.family).front());
        std::ostringstream line;
        line << cell_name(id);
        for (size_t pad = line.str().size(); pad < 8; ++pad) line << ' ';
        const std::string gname = sp.group.name();
        line << gname;
        for (size_t pad = gname.size(); pad < 16; ++pad) line << ' ';
        const std::string shp = detail::shape_tokens(param_shape(id.family));
        line << shp;
        for (size_t pad = shp.size(); pad < 13; ++pad) line << ' ';
        const std::string mid = detail::middle_kind_name(sp.middle.kind);
        line << mid;
        for (size_t pad = mid.size(); pad < 19; ++pad) line << ' ';
        line << domain_name(sp.middle.domain);
        for (size_t pad = std::string(domain_name(sp.middle.domain)).size(); pad < 10; ++pad)
          line << ' ';
        line << (has_decomposition(id) ? "yes" : "-");
        out << line.str() << "\n";
      }
      out << "53 cells\n";
      return kPass;
    }

    if (sample->parsed()) {
      const FactorizationSpec sp = resolve_spec(sample);
      return detail::with_field(sp.field, [&]<class T>() {
        Rng rng(seed);
        const auto fe = sample_factored<T>(sp, rng, scale);
        const Matrix<T> g = compose(sp, fe);
        if (out_path.empty()) {
          out << matrix_to_string(g);
        } else {
          write_matrix(g, out_path);
          out << "sampled " << sp.label << "  seed " << seed << "  ->  " << out_path << "\n";
        }
        return kPass;
      });
    }

    if (decomp->parsed()) {
      const FactorizationSpec sp = resolve_spec(decomp);
      return detail::with_field(sp.field, [&]<class T>() {
        const Matrix<T> g = read_matrix_as<T>(in_path);
        const auto fe = decompose(sp, g);
        const auto rep = verify_factored(sp, fe, &g, nullptr, thresholds(), seed);
        if (!out_path.empty()) {
          namespace fs = std::filesystem;
          fs::create_directories(out_path);
          const fs::path dir(out_path);
          write_matrix(fe.k1, (dir / "k1.mat").string());
          write_matrix(fe.k2, (dir / "k2.mat").string());
          write_matrix(middle_build<T>(sp.middle, fe.theta), (dir / "middle.mat").string());
          Matrix<double> th(1, sp.middle.angle_count);
          for (int l = 0; l < sp.middle.angle_count; ++l) th(0, l) = fe.theta[l];
          write_matrix(th, (dir / "theta.mat").string());
          out << "factors written to " << out_path << "\n";
        }
        out << to_text(rep, thresholds());
        return rep.pass ? kPass : kFail;
      });
    }

    if (verify->parsed()) {
      const FactorizationSpec sp = resolve_spec(verify);
      return detail::with_field(sp.field, [&]<class T>() {
        const Matrix<T> g = read_matrix_as<T>(in_path);
        const Thresholds th = thresholds();
        if (has_decomposition(sp.id)) {
          const auto fe = decompose(sp, g);
          const auto rep = verify_factored(sp, fe, &g, nullptr, th, seed);
          out << to_text(rep, th);
          return rep.pass ? kPass : kFail;
        }
        const double r = membership_residual(sp.group, g);
        const bool pass = r <= th.membership * sp.middle.dim;
        out << "cell " << sp.label << "\n";
        out << "  G membership     " << detail::format_g(r) << "  (tol "
            << detail::format_g(th.membership) << " x n)\n";
        out << "  result           " << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? kPass : kFail;
      });
    }

    if (fold_cmd->parsed()) {
      const FactorizationSpec sp = resolve_spec(fold_cmd);
      const FoldSide fs = side == "left" ? FoldSide::Left : FoldSide::Right;
      return detail::with_field(sp.field, [&]<class T>() {
        FactoredElement<T> fe;
        if (in_path.empty()) {
          Rng rng(seed);
          fe = sample_factored<T>(sp, rng, scale);
        } else {
          fe = decompose(sp, read_matrix_as<T>(in_path));
        }
        const Matrix<T> g = compose(sp, fe);
        const double residual = fold_identity_residual(sp, fe, fs);
        const double limit =
            (tol > 0.0 ? tol : 1e-9) * std::max(1.0, g.norm_fro() * g.norm_fro());
        const bool pass = residual <= limit;
        if (!out_path.empty()) write_matrix(fold(sp, fe, fs).folded, out_path);
        out << "cell " << sp.label << "  side " << side << "\n";
        out << "  fold identity    " << detail::format_g(residual) << "  (tol "
            << detail::format_g(limit) << ")\n";
        out << "  result           " << (pass ? "PASS" : "FAIL") << "\n";
        return pass ? kPass : kFail;
      });
    }

    // sweep
    SweepConfig cfg;
    cfg.sizes.clear();
    for (int n = 2; n <= max_n; ++n) cfg.sizes.push_back(n);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.scale = scale;
    cfg.filter = filter;
    cfg.threads = threads;
    if (tol > 0.0) {
      cfg.thresholds.membership = tol;
      cfg.thresholds.reconstruction = tol;
    }
    cfg.report_path = report_path;
    cfg.csv_path = csv_path;
    const SweepResult res = sweep(cfg);
    const std::string text = to_text(res);
    if (report_path.empty()) {
      out << text;
    } else {
      write_text_file(report_path, text);
      out << "report written to " << report_path << "\n";
    }
    if (!csv_path.empty()) write_text_file(csv_path, to_csv(res));
    out << "cells passing: ";
    int passed = 0;
    for (const SweepRecord& r : res.records) passed += r.pass ? 1 : 0;
    out << passed << "/" << res.records.size() << "\n";
    return res.pass ? kPass : kFail;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedDecomposition& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BadPartition& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFail;
  }
}

}  // namespace kak::cli
