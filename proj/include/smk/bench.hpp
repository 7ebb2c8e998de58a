// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Experiment harness: budget sweeps with CSV output, and approximation
// ratio verification against exhaustive search.
//
// Sweep CSV columns (fixed order):
//   application,n,budget_fraction,budget,algorithm,seed,objective_value,
//   query_count,wall_ms,epsilon
// Randomized algorithms run `reps` times per (budget, seed) cell with run
// seeds seed, DeriveSeed(seed, 1), ...; each such cell is followed by a
// "mean" and a "std" row (seed column holds the tag). query_count is the
// algorithm's own oracle count; the objective value written is a fresh,
// unmetered recomputation of f(S).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "smk/algorithms.hpp"
#include "smk/core.hpp"
#include "smk/data.hpp"
#include "smk/random.hpp"

namespace smk {

inline constexpr std::string_view kSweepCsvHeader =
    "application,n,budget_fraction,budget,algorithm,seed,objective_value,"
    "query_count,wall_ms,epsilon";

inline constexpr int kDefaultReps = 20;

struct SweepConfig {
  ObjectiveKind application = ObjectiveKind::kCut;
  std::string input;  // empty: use the generator
  std::size_t n = 500;
  double edge_prob = 0.2;
  std::vector<double> budget_fractions = {0.02, 0.04, 0.06, 0.08, 0.10, 0.12};
  std::vector<Algorithm> algorithms = {Algorithm::kLa, Algorithm::kLar,
                                       Algorithm::kDla, Algorithm::kRla,
                                       Algorithm::kBaseline};
  double epsilon = 0.1;
  std::vector<uint64_t> seeds = {42};
  int reps = kDefaultReps;

  void Validate() const {
    if (budget_fractions.empty()) {
      throw InvalidInput("at least one budget fraction is required");
    }
    for (double f : budget_fractions) {
      if (!(f > 0.0 && f <= 1.0)) {
        throw InvalidInput("budget fraction " + internal::FormatDouble(f) +
                           " is outside (0, 1]");
      }
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw InvalidInput("epsilon must lie in (0, 1)");
    }
    if (algorithms.empty()) throw InvalidInput("no algorithms selected");
    if (seeds.empty()) throw InvalidInput("at least one seed is required");
    if (reps < 1) throw InvalidInput("reps must be >= 1");
    if (input.empty()) {
      if (n < 1) throw InvalidInput("--n must be >= 1");
      if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
        throw InvalidInput("edge probability must lie in [0, 1]");
      }
    }
  }
};

enum class RowKind { kRun, kMean, kStd };

struct SweepRow {
  std::string application;
  std::size_t n = 0;
  double budget_fraction = 0.0;
  double budget = 0.0;
  std::string algorithm;
  std::string seed;
  double objective_value = 0.0;
  double query_count = 0.0;
  double wall_ms = 0.0;
  double epsilon = 0.0;
  RowKind kind = RowKind::kRun;
};

inline std::string FormatSweepRow(const SweepRow& r) {
  char buf[512];
  const char* qfmt = r.kind == RowKind::kRun ? "%.0f" : "%.17g";
  char q[64];
  std::snprintf(q, sizeof(q), qfmt, r.query_count);
  std::snprintf(buf, sizeof(buf), "%s,%zu,%.6g,%.17g,%s,%s,%.17g,%s,%.3f,%.6g",
                r.application.c_str(), r.n, r.budget_fraction, r.budget,
                r.algorithm.c_str(), r.seed.c_str(), r.objective_value, q,
                r.wall_ms, r.epsilon);
  return buf;
}

inline void WriteSweepCsv(const std::vector<SweepRow>& rows,
                          std::ostream& out) {
  out << kSweepCsvHeader << '\n';
  for (const SweepRow& r : rows) out << FormatSweepRow(r) << '\n';
}

struct Source {
  std::shared_ptr<const Objective> objective;
  std::vector<double> costs;
};

// Objective and cost model for an application, from a file or generator.
//   revenue        edge list or ER graph, costs 1 - exp(-0.2 sqrt(wdeg))
//   maxcut         edge list or ER graph, costs U(0,1) drawn from seed
//   summarization  similarity CSV (cost column) or synthetic, U(0.1,1)
inline Source LoadSource(const SweepConfig& config, uint64_t seed) {
  Source src;
  if (config.application == ObjectiveKind::kSummarization) {
    SimilarityData data;
    if (!config.input.empty()) {
      data = ReadSimilarityCsvFile(config.input);
    } else {
      data.sim = GenSimilarity(config.n, seed);
      data.costs = UniformCosts(config.n, seed, 0.1, 1.0);
    }
    src.objective = MakeObjective(std::move(data.sim));
    src.costs = std::move(data.costs);
    return src;
  }
  WeightedGraph g = config.input.empty()
                        ? GenEr({config.n, config.edge_prob, seed,
                                 WeightDist::kUniform01})
                        : ReadEdgeListFile(config.input);
  src.costs = config.application == ObjectiveKind::kRevenue
                  ? RevenueCosts(g)
                  : UniformCosts(g.size(), seed);
  src.objective = MakeObjective(config.application, std::move(g));
  return src;
}

namespace internal {

struct Timed {
  RunResult result;
  double wall_ms;
};

inline Timed TimedRun(Algorithm a, const Instance& instance,
                      const AlgParams& params) {
  CountingOracle oracle(instance.objective());
  auto t0 = std::chrono::steady_clock::now();
  RunResult r = Run(a, instance, params, oracle);
  auto t1 = std::chrono::steady_clock::now();
  if (r.query_count != oracle.queries()) {
    throw std::logic_error("unmetered oracle use in " + r.algorithm);
  }
  if (!Feasible(instance, r.solution)) {
    throw std::logic_error(r.algorithm + " returned an infeasible set");
  }
  // Unmetered recomputation.
  r.value = instance.objective()->Evaluate(r.solution);
  return {std::move(r),
          std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

inline std::pair<double, double> MeanStd(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(xs.size() - 1))};
}

}  // namespace internal

// Rows are ordered by (budget fraction, algorithm, seed, repetition) in the
// order given by the config.
inline std::vector<SweepRow> RunSweep(const SweepConfig& config) {
  config.Validate();
  const std::string app(ObjectiveName(config.application));
  std::vector<Source> sources;
  for (uint64_t seed : config.seeds) sources.push_back(LoadSource(config, seed));

  std::vector<SweepRow> rows;
  for (double fraction : config.budget_fractions) {
    std::vector<Instance> instances;
    for (const Source& s : sources) {
      instances.push_back(BuildInstance(s.objective, s.costs, fraction));
    }
    for (Algorithm a : config.algorithms) {
      if (a == Algorithm::kExhaustive) {
        for (const Instance& inst : instances) {
          if (inst.size() > kExhaustiveLimit) {
            throw InvalidInput("exhaustive refuses n = " +
                               std::to_string(inst.size()) + " (limit " +
                               std::to_string(kExhaustiveLimit) + ")");
          }
        }
      }
      for (std::size_t si = 0; si < config.seeds.size(); ++si) {
        const Instance& inst = instances[si];
        const uint64_t seed = config.seeds[si];
        SweepRow base;
        base.application = app;
        base.n = inst.size();
        base.budget_fraction = fraction;
        base.budget = inst.budget();
        base.algorithm = std::string(AlgorithmName(a));
        base.epsilon = config.epsilon;

        const int reps = IsRandomized(a) ? config.reps : 1;
        std::vector<double> values, queries, walls;
        for (int rep = 0; rep < reps; ++rep) {
          AlgParams params;
          params.epsilon = config.epsilon;
          params.seed = rep == 0 ? seed : DeriveSeed(seed, rep);
          internal::Timed t = internal::TimedRun(a, inst, params);
          SweepRow row = base;
          row.seed = std::to_string(params.seed);
          row.objective_value = t.result.value;
          row.query_count = static_cast<double>(t.result.query_count);
          row.wall_ms = t.wall_ms;
          rows.push_back(row);
          values.push_back(row.objective_value);
          queries.push_back(row.query_count);
          walls.push_back(row.wall_ms);
        }
        if (IsRandomized(a)) {
          auto [vm, vs] = internal::MeanStd(values);
          auto [qm, qs] = internal::MeanStd(queries);
          auto [wm, ws] = internal::MeanStd(walls);
          SweepRow mean = base;
          mean.kind = RowKind::kMean;
          mean.seed = "mean";
          mean.objective_value = vm;
          mean.query_count = qm;
          mean.wall_ms = wm;
          SweepRow sd = base;
          sd.kind = RowKind::kStd;
          sd.seed = "std";
          sd.objective_value = vs;
          sd.query_count = qs;
          sd.wall_ms = ws;
          rows.push_back(mean);
          rows.push_back(sd);
        }
      }
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Ratio verification.

inline constexpr double kMonteCarloSlack = 0.98;

struct VerifyConfig {
  std::vector<ObjectiveKind> families = {ObjectiveKind::kCut,
                                         ObjectiveKind::kRevenue,
                                         ObjectiveKind::kSummarization};
  std::size_t instances = 300;
  std::size_t max_n = 12;
  double epsilon = 0.1;
  uint64_t seed = 42;
  int lar_seeds = 100;
  int rla_seeds = 200;
  double slack = kMonteCarloSlack;

  void Validate() const {
    if (families.empty()) throw InvalidInput("no instance families selected");
    if (instances < 1) throw InvalidInput("instances must be >= 1");
    if (max_n < 1) throw InvalidInput("--n must be >= 1");
    if (max_n > kExhaustiveLimit) {
      throw InvalidInput("verify refuses n = " + std::to_string(max_n) +
                         ": exhaustive search is limited to n <= " +
                         std::to_string(kExhaustiveLimit));
    }
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw InvalidInput("epsilon must lie in (0, 1)");
    }
    if (lar_seeds < 1 || rla_seeds < 1) {
      throw InvalidInput("Monte Carlo seed counts must be >= 1");
    }
  }
};

struct VerifyRow {
  std::size_t instance = 0;
  std::string family;
  std::size_t n = 0;
  double budget = 0.0;
  double opt = 0.0;
  std::string algorithm;
  double value = 0.0;  // Monte Carlo mean for randomized algorithms
  double ratio = 1.0;  // opt / value
  double factor = 0.0;
  bool pass = true;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  std::map<std::string, int> violations;
  int64_t infeasible = 0;

  bool ok() const {
    if (infeasible != 0) return false;
    for (const auto& [name, count] : violations) {
      if (count != 0) return false;
    }
    return true;
  }
};

// opt / value, with 0/0 reported as 1.
inline double ApproximationRatio(double opt, double value) {
  if (!(opt > 0.0)) return 1.0;
  if (!(value > 0.0)) return std::numeric_limits<double>::infinity();
  return opt / value;
}

// Instance i of a verification suite.
inline Instance VerifyInstance(const VerifyConfig& config, std::size_t i,
                               ObjectiveKind* family = nullptr) {
  const uint64_t seed = DeriveSeed(config.seed, i);
  const ObjectiveKind kind = config.families[i % config.families.size()];
  const std::size_t lo = std::max<std::size_t>(1, (config.max_n + 1) / 2);
  Rng rng = Rng(seed).Stream("verify.n");
  const std::size_t n = lo + rng.Index(config.max_n - lo + 1);
  if (family != nullptr) *family = kind;
  return GenRandomInstance(kind, n, seed);
}

inline VerifyReport VerifyRatios(const VerifyConfig& config) {
  config.Validate();
  VerifyReport report;
  for (const char* a : {"la", "lar", "dla", "rla"}) report.violations[a] = 0;

  for (std::size_t i = 0; i < config.instances; ++i) {
    ObjectiveKind kind;
    const Instance inst = VerifyInstance(config, i, &kind);
    const ExactResult exact = Exhaustive(inst);
    const uint64_t seed = DeriveSeed(config.seed, i);

    auto record = [&](std::string_view name, double value, double factor,
                      double slack) {
      VerifyRow row;
      row.instance = i;
      row.family = std::string(ObjectiveName(kind));
      row.n = inst.size();
      row.budget = inst.budget();
      row.opt = exact.opt_value;
      row.algorithm = std::string(name);
      row.value = value;
      row.ratio = ApproximationRatio(exact.opt_value, value);
      row.factor = factor;
      row.pass = value >= exact.opt_value / factor * slack;
      if (!row.pass) ++report.violations[row.algorithm];
      report.rows.push_back(row);
    };
    auto check = [&](const RunResult& r) {
      if (!Feasible(inst, r.solution)) ++report.infeasible;
    };

    AlgParams params;
    params.epsilon = config.epsilon;
    RunResult la = La(inst);
    check(la);
    record("la", la.value, kLaFactor, 1.0);
    RunResult dla = Dla(inst, params);
    check(dla);
    record("dla", dla.value, 6.0 + config.epsilon, 1.0);

    double lar_sum = 0.0;
    for (int s = 0; s < config.lar_seeds; ++s) {
      params.seed = DeriveSeed(seed, static_cast<uint64_t>(s));
      RunResult r = Lar(inst, params);
      check(r);
      lar_sum += r.value;
    }
    record("lar", lar_sum / config.lar_seeds, kLarFactor, config.slack);

    double rla_sum = 0.0;
    for (int s = 0; s < config.rla_seeds; ++s) {
      params.seed = DeriveSeed(seed, static_cast<uint64_t>(s));
      RunResult r = Rla(inst, params);
      check(r);
      rla_sum += r.value;
    }
    record("rla", rla_sum / config.rla_seeds, 4.0 + config.epsilon,
           config.slack);
  }
  return report;
}

inline constexpr std::string_view kVerifyCsvHeader =
    "instance,family,n,budget,opt,algorithm,value,ratio,factor,pass";

inline void WriteVerifyCsv(const VerifyReport& report, std::ostream& out) {
  out << kVerifyCsvHeader << '\n';
  char buf[512];
  for (const VerifyRow& r : report.rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%s,%zu,%.17g,%.17g,%s,%.17g,%.17g,%.6g,%d",
                  r.instance, r.family.c_str(), r.n, r.budget, r.opt,
                  r.algorithm.c_str(), r.value, r.ratio, r.factor,
                  r.pass ? 1 : 0);
    out << buf << '\n';
  }
}

}  // namespace smk
