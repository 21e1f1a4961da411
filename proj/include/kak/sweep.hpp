#pragma once

#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "kak/verify.hpp"

// Full-registry sweep: for every selected cell, derive cases from the
// configured sizes, run compose-verify trials, the spec-consistency check,
// and -- where a route exists -- decompose round-trips.  Records are keyed
// by cell in catalog order and carry no timings, so a sweep with the same
// config reproduces byte-identical reports regardless of scheduling.

namespace kak {

struct SweepConfig {
  std::vector<int> sizes = {2, 3, 4, 5, 6};
  int trials = 10;
  uint64_t seed = 2026;
  double scale = 0.5;
  Thresholds thresholds;
  std::vector<std::string> filter;  // tokens "F9" (family) or "F9b1" (cell); empty = all
  int threads = 0;                  // 0 = hardware concurrency
  std::string report_path;          // optional text report destination
  std::string csv_path;             // optional CSV summary destination
};

struct SweepRecord {
  std::string cell;
  std::string label;
  int cases = 0;
  int trials = 0;
  double membership = 0.0;       // worst factor/ambient membership residual
  double consistency = 0.0;      // worst of the four consistency measures
  double reconstruction = -1.0;  // worst decompose round-trip; -1 = no route
  double theta = -1.0;           // worst round-trip angle deviation; -1 = no route
  bool pass = false;
  std::string note;  // first failure or exception, empty when clean
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRecord> records;
  bool pass = false;
};

namespace detail {

// Cases for one family at size n, covering balanced (p = q where possible),
// unbalanced (p > q), and degenerate (s = 0) partitions.
inline std::vector<CaseParams> cases_for(int family, int n) {
  std::vector<CaseParams> out;
  std::set<std::tuple<int, int, int, int, int, int, int, int, int>> seen;
  const auto push = [&](CaseParams c) {
    if (seen.insert({c.n, c.p, c.q, c.r, c.s, c.p1, c.q1, c.p2, c.q2}).second) out.push_back(c);
  };
  switch (param_shape(family)) {
    case ParamShape::N: {
      CaseParams c;
      c.n = n;
      push(c);
      break;
    }
    case ParamShape::PQ: {
      if (n < 2) break;
      CaseParams c;
      c.p = n - n / 2;
      c.q = n / 2;
      push(c);
      c.p = n - 1;
      c.q = 1;
      push(c);
      break;
    }
    case ParamShape::PQRS: {
      if (n < 2) break;
      CaseParams c;
      c.p = c.r = n - n / 2;
      c.q = c.s = n / 2;
      push(c);
      c.p = c.r = n - 1;
      c.q = c.s = 1;
      push(c);
      c.p = n - n / 2;
      c.q = n / 2;
      c.r = n;
      c.s = 0;
      push(c);
      break;
    }
    case ParamShape::Split: {
      CaseParams c;
      if (n == 2) {
        c.p1 = 1; c.q1 = 0; c.p2 = 0; c.q2 = 1;
        push(c);
      } else if (n == 3) {
        c.p1 = 1; c.q1 = 1; c.p2 = 1; c.q2 = 0;
        push(c);
      } else if (n >= 4) {
        const int b = n / 4, rem = n % 4;
        c.p1 = b + (rem >= 1);
        c.q1 = b;
        c.p2 = b + (rem >= 3);
        c.q2 = b + (rem >= 2);
        push(c);
        c.p1 = n - 3; c.q1 = 1; c.p2 = 1; c.q2 = 1;
        push(c);
      }
      break;
    }
  }
  return out;
}

inline bool matches_filter(const FactorizationId& id, const std::vector<std::string>& filter) {
  if (filter.empty()) return true;
  const std::string fam = "F" + std::to_string(id.family);
  const std::string cell = cell_name(id);
  for (const std::string& tok : filter)
    if (tok == fam || tok == cell) return true;
  return false;
}

template <class T>
void sweep_cell(const FactorizationId& id, const SweepConfig& cfg, SweepRecord& rec) {
  int case_idx = 0;
  for (int n : cfg.sizes) {
    for (const CaseParams& c : cases_for(id.family, n)) {
      FactorizationSpec sp;
      try {
        sp = make_spec(id, c);
      } catch (const std::exception&) {
        ++case_idx;
        continue;  // size not representable for this family variant
      }
      ++rec.cases;
      const auto cons = consistency_check(
          sp, mix_seed(cfg.seed, id.family * 10 + id.beta, case_idx, 1u << 20), 2,
          cfg.thresholds);
      rec.consistency = std::max({rec.consistency, cons.involution, cons.automorphism,
                                  cons.generator, cons.commutation});
      if (!cons.pass && rec.note.empty()) rec.note = "consistency check failed";
      if (!cons.pass) rec.pass = false;
      for (int t = 0; t < cfg.trials; ++t) {
        const uint64_t seed = mix_seed(cfg.seed, id.family * 10 + id.beta, case_idx, t);
        Rng rng(seed);
        try {
          const auto fe = sample_factored<T>(sp, rng, cfg.scale);
          const Matrix<T> g = compose(sp, fe);
          auto rep = verify_factored(sp, fe, static_cast<const Matrix<T>*>(nullptr),
                                     static_cast<const std::vector<double>*>(nullptr),
                                     cfg.thresholds, seed);
          for (const auto& [who, r] : rep.factor_residuals)
            rec.membership = std::max(rec.membership, r);
          if (!rep.pass) {
            rec.pass = false;
            if (rec.note.empty()) rec.note = "compose-verify failed";
          }
          if (has_decomposition(id) && beta_field(id.beta) == field_of<T>) {
            const auto out = decompose(sp, g);
            auto drep = verify_factored(sp, out, &g, &fe.theta, cfg.thresholds, seed);
            rec.reconstruction = std::max(rec.reconstruction, drep.reconstruction);
            rec.theta = std::max(rec.theta, drep.roundtrip_theta.value_or(0.0));
            for (const auto& [who, r] : drep.factor_residuals)
              rec.membership = std::max(rec.membership, r);
            if (!drep.pass) {
              rec.pass = false;
              if (rec.note.empty()) rec.note = "decompose round-trip failed";
            }
          }
        } catch (const std::exception& e) {
          rec.pass = false;
          if (rec.note.empty()) rec.note = e.what();
        }
        rec.trials += 1;
      }
      ++case_idx;
    }
  }
}

}  // namespace detail

inline SweepResult sweep(const SweepConfig& cfg) {
  SweepResult result;
  result.config = cfg;
  std::vector<FactorizationId> ids;
  for (const FactorizationId& id : catalog())
    if (detail::matches_filter(id, cfg.filter)) ids.push_back(id);
  result.records.resize(ids.size());
  std::atomic<size_t> next{0};
  const auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < ids.size(); i = next.fetch_add(1)) {
      const FactorizationId& id = ids[i];
      SweepRecord& rec = result.records[i];
      rec.cell = cell_name(id);
      rec.pass = true;
      rec.label = make_spec(id, default_cases(id.family).front()).label;
      switch (beta_field(id.beta)) {
        case Field::R: detail::sweep_cell<double>(id, cfg, rec); break;
        case Field::C: detail::sweep_cell<cd>(id, cfg, rec); break;
        case Field::H: detail::sweep_cell<Quaternion>(id, cfg, rec); break;
      }
      if (rec.cases == 0) {
        rec.pass = false;
        rec.note = "no representable case for the configured sizes";
      }
    }
  };
  unsigned k = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                               : std::max(1u, std::thread::hardware_concurrency());
  k = std::min<unsigned>(k, static_cast<unsigned>(ids.size() ? ids.size() : 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < k; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  result.pass = !result.records.empty();
  for (const SweepRecord& r : result.records) result.pass = result.pass && r.pass;
  return result;
}

inline std::string to_text(const SweepResult& res) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(3);
  const SweepConfig& c = res.config;
  os << "factorization sweep report\n";
  os << "sizes:";
  for (int n : c.sizes) os << " " << n;
  os << "\ntrials per case: " << c.trials << "\nseed: " << c.seed << "\nscale: " << c.scale
     << "\n";
  os << "thresholds: membership " << c.thresholds.membership << " x n, reconstruction "
     << c.thresholds.reconstruction << " x n, roundtrip theta " << c.thresholds.roundtrip_theta
     << ", involution " << c.thresholds.invol << ", algebra " << c.thresholds.algebra << "\n";
  if (!c.filter.empty()) {
    os << "filter:";
    for (const std::string& f : c.filter) os << " " << f;
    os << "\n";
  }
  os << "\n";
  int passed = 0;
  for (const SweepRecord& r : res.records) {
    os << r.cell;
    for (size_t pad = r.cell.size(); pad < 8; ++pad) os << ' ';
    os << r.label;
    for (size_t pad = r.label.size(); pad < 28; ++pad) os << ' ';
    os << " cases " << r.cases << "  trials " << r.trials << "  membership " << r.membership
       << "  consistency " << r.consistency;
    if (r.reconstruction >= 0.0)
      os << "  reconstruction " << r.reconstruction << "  theta " << r.theta;
    os << "  " << (r.pass ? "PASS" : "FAIL");
    if (!r.note.empty()) os << "  [" << r.note << "]";
    os << "\n";
    passed += r.pass ? 1 : 0;
  }
  os << "\ncells passing: " << passed << "/" << res.records.size() << "\n";
  return os.str();
}

inline std::string to_csv(const SweepResult& res) {
  std::ostringstream os;
  os.setf(std::ios::scientific);
  os.precision(3);
  os << "cell,label,cases,trials,membership,consistency,reconstruction,theta,pass\n";
  for (const SweepRecord& r : res.records) {
    os << r.cell << ",\"" << r.label << "\"," << r.cases << "," << r.trials << ","
       << r.membership << "," << r.consistency << ",";
    if (r.reconstruction >= 0.0) os << r.reconstruction;
    os << ",";
    if (r.theta >= 0.0) os << r.theta;
    os << "," << (r.pass ? "true" : "false") << "\n";
  }
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace kak
