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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every tolerance is pinned below; none is tuned at runtime.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "smk/smk.hpp"

namespace smk {
namespace {

constexpr double kEps = 0.1;
constexpr double kPropertyTol = 1e-9;
constexpr int kPropertySamples = 1000;
constexpr double kLinearityLo = 1.8;
constexpr double kLinearityHi = 2.2;
constexpr int kBaselineWinsRequired = 4;
constexpr int kDeterminismSeeds = 50;

// Outputs checked against c(S) <= B outside the verification suite.
int64_t g_infeasible = 0;
int64_t g_outputs = 0;

void CheckFeasible(const Instance& inst, const RunResult& r) {
  ++g_outputs;
  if (!Feasible(inst, r.solution)) ++g_infeasible;
}

struct Verdict {
  bool pass;
  std::string detail;
};

int Report(int id, const char* title, const std::function<Verdict()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              t0).count();
  std::printf("[%s] AC%d %s: %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id,
              title, v.detail.c_str(), secs);
  std::fflush(stdout);
  return v.pass ? 0 : 1;
}

double Ceil(double x) { return std::ceil(x); }

int64_t LaQueryBound(int64_t n) { return 3 * n + 4; }

int64_t DlaQueryBound(int64_t n, double eps) {
  const double ep = eps / 14.0;
  const double delta = Ceil(std::log(1.0 / ep) / ep);
  return static_cast<int64_t>(3 * n + 4 +
                              2 * n * (Ceil(std::log(19.0 / ep) / ep) + 1) +
                              2 * n * (delta + 1) + (2 * delta + 5));
}

Instance ErCut(std::size_t n, uint64_t seed, double fraction) {
  SweepConfig c;
  c.application = ObjectiveKind::kCut;
  c.n = n;
  c.edge_prob = 0.2;
  Source s = LoadSource(c, seed);
  return BuildInstance(s.objective, s.costs, fraction);
}

// AC1 and AC2 share one verification run.
VerifyReport& SharedVerify() {
  static VerifyReport report = [] {
    VerifyConfig c;
    c.instances = 300;
    c.max_n = 12;
    c.epsilon = kEps;
    c.lar_seeds = 100;
    c.rla_seeds = 200;
    c.slack = kMonteCarloSlack;
    return VerifyRatios(c);
  }();
  return report;
}

std::string WorstRatio(const VerifyReport& r, const std::string& alg) {
  double worst = 0.0;
  int count = 0;
  for (const VerifyRow& row : r.rows) {
    if (row.algorithm != alg) continue;
    worst = std::max(worst, row.ratio);
    ++count;
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%s: %d instances, %d violations, worst opt/f %.4g",
                alg.c_str(), count, r.violations.at(alg), worst);
  return buf;
}

Verdict Ac1() {
  const VerifyReport& r = SharedVerify();
  bool pass = r.violations.at("la") == 0 && r.violations.at("dla") == 0;
  return {pass, WorstRatio(r, "la") + "; " + WorstRatio(r, "dla")};
}

Verdict Ac2() {
  const VerifyReport& r = SharedVerify();
  bool pass = r.violations.at("lar") == 0 && r.violations.at("rla") == 0;
  return {pass, WorstRatio(r, "lar") + " (100 seeds); " + WorstRatio(r, "rla") +
                    " (200 seeds)"};
}

Verdict Ac3() {
  int runs = 0, failures = 0;
  double worst_dla = 0.0;
  for (std::size_t n : {100u, 500u, 2000u}) {
    for (double fraction : {0.02, 0.10}) {
      Instance inst = ErCut(n, 42, fraction);
      const int64_t size = static_cast<int64_t>(inst.size());
      RunResult la = La(inst);
      CheckFeasible(inst, la);
      ++runs;
      if (la.query_count > LaQueryBound(size)) ++failures;
      for (double eps : {0.1, 0.3}) {
        AlgParams p;
        p.epsilon = eps;
        RunResult dla = Dla(inst, p);
        CheckFeasible(inst, dla);
        ++runs;
        const int64_t bound = DlaQueryBound(size, eps);
        worst_dla = std::max(worst_dla, static_cast<double>(dla.query_count) /
                                            static_cast<double>(bound));
        if (dla.query_count > bound) ++failures;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "%d runs, %d over bound, max dla count/bound %.3f", runs,
                failures, worst_dla);
  return {failures == 0, buf};
}

Verdict Ac4() {
  // Randomized algorithms use the mean count over these seeds.
  const int kSeeds = 10;
  const Instance small = ErCut(400, 42, 0.10);
  const Instance large = ErCut(800, 42, 0.10);
  auto mean_queries = [&](Algorithm a, const Instance& inst) {
    const int reps = IsRandomized(a) ? kSeeds : 1;
    double total = 0.0;
    for (int s = 0; s < reps; ++s) {
      AlgParams p;
      p.epsilon = kEps;
      p.seed = DeriveSeed(7, static_cast<uint64_t>(s));
      RunResult r = Run(a, inst, p);
      CheckFeasible(inst, r);
      total += static_cast<double>(r.query_count);
    }
    return total / reps;
  };
  bool pass = true;
  std::string detail;
  for (Algorithm a : {Algorithm::kLa, Algorithm::kLar, Algorithm::kDla,
                      Algorithm::kRla}) {
    const double ratio = mean_queries(a, large) / mean_queries(a, small);
    pass = pass && ratio >= kLinearityLo && ratio <= kLinearityHi;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s%s %.3f", detail.empty() ? "" : ", ",
                  std::string(AlgorithmName(a)).c_str(), ratio);
    detail += buf;
  }
  return {pass, "q(800)/q(400): " + detail};
}

Verdict Ac5() {
  SweepConfig c;
  c.application = ObjectiveKind::kCut;
  c.n = 500;
  c.edge_prob = 0.2;
  c.budget_fractions = {0.02, 0.04, 0.06, 0.08, 0.10, 0.12};
  c.algorithms = {Algorithm::kLa, Algorithm::kDla, Algorithm::kBaseline};
  c.epsilon = kEps;
  c.seeds = {42};
  Source src = LoadSource(c, 42);
  int la_ok = 0, baseline_wins = 0;
  std::string detail;
  for (double fraction : c.budget_fractions) {
    Instance inst = BuildInstance(src.objective, src.costs, fraction);
    AlgParams p;
    p.epsilon = kEps;
    RunResult la = La(inst);
    RunResult dla = Dla(inst, p);
    RunResult base = DensityGreedyBaseline(inst);
    CheckFeasible(inst, la);
    CheckFeasible(inst, dla);
    CheckFeasible(inst, base);
    if (dla.value >= la.value) ++la_ok;
    if (dla.value >= base.value) ++baseline_wins;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s%g%%: la %.2f dla %.2f base %.2f",
                  detail.empty() ? "" : "; ", fraction * 100, la.value,
                  dla.value, base.value);
    detail += buf;
  }
  const int points = static_cast<int>(c.budget_fractions.size());
  bool pass = la_ok == points && baseline_wins >= kBaselineWinsRequired;
  char head[96];
  std::snprintf(head, sizeof(head), "dla>=la %d/%d, dla>=baseline %d/%d [", la_ok,
                points, baseline_wins, points);
  return {pass, head + detail + "]"};
}

// Full objective over a random graph or similarity matrix, n <= 30.
std::shared_ptr<const Objective> PropertyObjective(ObjectiveKind k,
                                                   uint64_t seed, int n) {
  if (k == ObjectiveKind::kSummarization) {
    return MakeObjective(GenSimilarity(n, seed));
  }
  return MakeObjective(k, GenEr({static_cast<std::size_t>(n),
                                 0.2 + 0.3 * (seed % 3), seed,
                                 WeightDist::kUniform01}));
}

std::vector<Element> Subset(int n, double p, std::mt19937_64& rng) {
  std::vector<Element> s;
  std::bernoulli_distribution coin(p);
  for (Element e = 0; e < n; ++e) {
    if (coin(rng)) s.push_back(e);
  }
  return s;
}

Element Outside(int n, const std::vector<Element>& s, std::mt19937_64& rng) {
  std::vector<bool> in(n, false);
  for (Element e : s) in[e] = true;
  Element e = static_cast<Element>(rng() % n);
  while (in[e]) e = (e + 1) % n;
  return e;
}

std::vector<Element> Union(std::vector<Element> a,
                           const std::vector<Element>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

std::vector<Element> With(std::vector<Element> s, Element e) {
  s.push_back(e);
  return s;
}

struct PropertyCounts {
  int diminishing = 0, union_ineq = 0, negative = 0, incremental = 0;
  bool witness = false;
  int total() const { return diminishing + union_ineq + negative + incremental; }
};

PropertyCounts CheckProperties(ObjectiveKind k, uint64_t seed) {
  PropertyCounts c;
  std::mt19937_64 rng(seed);
  auto draw_n = [&](int lo) { return lo + static_cast<int>(rng() % (31 - lo)); };

  for (int t = 0; t < kPropertySamples; ++t) {
    // A subset of B, e outside B.
    int n = draw_n(2);
    auto f = PropertyObjective(k, rng(), n);
    auto b = Subset(n, 0.5, rng);
    if (static_cast<int>(b.size()) == n) b.pop_back();
    std::vector<Element> a;
    for (Element x : b) {
      if (rng() & 1) a.push_back(x);
    }
    Element e = Outside(n, b, rng);
    const double ga = f->Evaluate(With(a, e)) - f->Evaluate(a);
    const double gb = f->Evaluate(With(b, e)) - f->Evaluate(b);
    if (!(ga >= gb - kPropertyTol)) ++c.diminishing;
    for (const auto* s : {&a, &b}) {
      if (!(f->Evaluate(*s) >= -kPropertyTol)) ++c.negative;
    }

    // f(T) <= f(T u X) + f(T u Y) for disjoint X, Y.
    n = draw_n(2);
    f = PropertyObjective(k, rng(), n);
    std::vector<Element> tset, x, y;
    for (Element v = 0; v < n; ++v) {
      if (rng() % 3 == 0) tset.push_back(v);
      switch (rng() % 3) {
        case 0: x.push_back(v); break;
        case 1: y.push_back(v); break;
        default: break;
      }
    }
    if (!(f->Evaluate(tset) <= f->Evaluate(Union(tset, x)) +
                                   f->Evaluate(Union(tset, y)) +
                                   kPropertyTol)) {
      ++c.union_ineq;
    }

    // Incremental state against recomputation.
    n = draw_n(2);
    f = PropertyObjective(k, rng(), n);
    auto s = Subset(n, 0.4, rng);
    if (static_cast<int>(s.size()) == n) s.pop_back();
    auto state = f->NewState();
    for (Element v : s) state->Add(v);
    e = Outside(n, s, rng);
    const double fs = f->Evaluate(s);
    if (!(std::abs(state->Gain(e) - (f->Evaluate(With(s, e)) - fs)) <=
          kPropertyTol * (1.0 + std::abs(fs)))) {
      ++c.incremental;
    }
  }

  for (int t = 0; t < 2000 && !c.witness; ++t) {
    const int n = 4 + static_cast<int>(rng() % 12);
    auto f = PropertyObjective(k, rng(), n);
    auto big = Subset(n, 0.7, rng);
    std::vector<Element> small;
    for (Element v : big) {
      if (rng() % 3 == 0) small.push_back(v);
    }
    if (small.size() == big.size()) continue;
    c.witness = f->Evaluate(small) > f->Evaluate(big) + kPropertyTol;
  }
  return c;
}

Verdict Ac6() {
  bool pass = true;
  std::string detail;
  uint64_t seed = 1001;
  for (ObjectiveKind k : {ObjectiveKind::kRevenue, ObjectiveKind::kSummarization,
                          ObjectiveKind::kCut}) {
    PropertyCounts c = CheckProperties(k, seed++);
    pass = pass && c.total() == 0 && c.witness;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "%s%s: dr %d, union %d, neg %d, incr %d, witness %s",
                  detail.empty() ? "" : "; ",
                  std::string(ObjectiveName(k)).c_str(), c.diminishing,
                  c.union_ineq, c.negative, c.incremental,
                  c.witness ? "yes" : "no");
    detail += buf;
  }
  return {pass, std::to_string(kPropertySamples) + " samples each; " + detail};
}

std::string CsvWithoutWall(const std::vector<SweepRow>& rows) {
  std::ostringstream csv;
  WriteSweepCsv(rows, csv);
  std::istringstream in(csv.str());
  std::string out;
  for (std::string line; std::getline(in, line);) {
    std::stringstream fields(line);
    int col = 0;
    for (std::string f; std::getline(fields, f, ','); ++col) {
      if (col != 8) out += f + ",";
    }
    out += "\n";
  }
  return out;
}

Verdict Ac7() {
  SweepConfig c;
  c.application = ObjectiveKind::kCut;
  c.n = 150;
  c.budget_fractions = {0.02, 0.06, 0.12};
  c.seeds = {42, 43};
  c.reps = 5;
  const std::string first = CsvWithoutWall(RunSweep(c));
  const std::string second = CsvWithoutWall(RunSweep(c));
  const bool csv_same = first == second;

  const Instance inst = ErCut(200, 9, 0.06);
  int mismatches = 0;
  for (int s = 0; s < kDeterminismSeeds; ++s) {
    AlgParams p;
    p.epsilon = kEps;
    p.seed = static_cast<uint64_t>(s);
    for (Algorithm a : {Algorithm::kLar, Algorithm::kRla}) {
      RunResult x = Run(a, inst, p);
      RunResult y = Run(a, inst, p);
      CheckFeasible(inst, x);
      CheckFeasible(inst, y);
      if (x.solution != y.solution || x.value != y.value ||
          x.query_count != y.query_count) {
        ++mismatches;
      }
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "sweep CSV %s (%zu bytes); lar/rla seed mismatches %d over %d seeds",
                csv_same ? "identical" : "DIFFERS", first.size(), mismatches,
                kDeterminismSeeds);
  return {csv_same && mismatches == 0, buf};
}

Verdict Ac8() {
  const VerifyReport& r = SharedVerify();
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "verification suite %lld infeasible; other suites %lld of %lld",
                static_cast<long long>(r.infeasible),
                static_cast<long long>(g_infeasible),
                static_cast<long long>(g_outputs));
  return {r.infeasible == 0 && g_infeasible == 0, buf};
}

}  // namespace
}  // namespace smk

int main() {
  using namespace smk;
  int failed = 0;
  failed += Report(1, "deterministic approximation factors", Ac1);
  failed += Report(2, "expected approximation factors", Ac2);
  failed += Report(3, "query-count bounds", Ac3);
  failed += Report(4, "linear query scaling", Ac4);
  failed += Report(5, "budget sweep trend", Ac5);
  failed += Report(6, "objective properties", Ac6);
  failed += Report(7, "determinism", Ac7);
  failed += Report(8, "feasibility", Ac8);
  std::printf("%d of 8 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
