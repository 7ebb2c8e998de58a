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

// Linear-query approximation algorithms for non-monotone submodular
// maximization under a knapsack constraint, plus two reference solvers.
//
//   La        deterministic, two disjoint sets over cheap elements, factor 19
//   Lar       randomized La with one sampled set, factor 16.034 in expectation
//   Dla       La + two-set threshold greedy + prefix boosting, factor 6 + eps
//   Rla       Lar + randomized threshold greedy + prefix boosting,
//             factor 4 + eps in expectation
//   Exhaustive            exact optimum by enumeration, n <= 25
//   DensityGreedyBaseline best of density greedy and the best singleton
//
// Passes visit elements in ascending id order. Every argmax breaks ties in
// favour of the candidate listed first (X before Y, smaller id first).
// Threshold and budget gates are exact comparisons without slack.

#include <cassert>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smk/core.hpp"
#include "smk/random.hpp"

namespace smk {

inline constexpr double kLaFactor = 19.0;
inline constexpr double kLarFactor = 16.034;
inline const double kLarDefaultP = std::sqrt(2.0) - 1.0;
inline const double kLarDefaultAlpha = std::sqrt(2.0 + 2.0 * std::sqrt(2.0));
inline constexpr std::size_t kExhaustiveLimit = 25;

struct AlgParams {
  double epsilon = 0.1;
  uint64_t seed = 0;
  double p = kLarDefaultP;
  double alpha = kLarDefaultAlpha;

  void Validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw InvalidInput("epsilon must lie in (0, 1)");
    }
    if (!(p > 0.0 && p <= 1.0)) throw InvalidInput("p must lie in (0, 1]");
    if (!(alpha >= 0.0)) throw InvalidInput("alpha must be non-negative");
  }
};

struct RunResult {
  std::vector<Element> solution;  // insertion order
  double value = 0.0;
  int64_t query_count = 0;
  AlgParams params;
  std::string algorithm;
  // Elements offered to a gate during construction passes; for rla this is
  // the size of the recorded candidate sequence U.
  int64_t candidates_inspected = 0;
  // Elements that entered a construction set (rla: coin came up heads).
  int64_t admitted = 0;
  // Threshold-greedy passes run (dla, rla).
  int64_t threshold_passes = 0;
};

struct ExactResult {
  std::vector<Element> opt_set;  // ascending ids
  double opt_value = 0.0;
  std::optional<Element> r;  // most expensive member of opt_set
};

enum class Algorithm { kLa, kLar, kDla, kRla, kBaseline, kExhaustive };

inline std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kLa: return "la";
    case Algorithm::kLar: return "lar";
    case Algorithm::kDla: return "dla";
    case Algorithm::kRla: return "rla";
    case Algorithm::kBaseline: return "baseline";
    case Algorithm::kExhaustive: return "exhaustive";
  }
  return "?";
}

inline std::optional<Algorithm> ParseAlgorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kLa, Algorithm::kLar, Algorithm::kDla,
                      Algorithm::kRla, Algorithm::kBaseline,
                      Algorithm::kExhaustive}) {
    if (AlgorithmName(a) == name) return a;
  }
  return std::nullopt;
}

inline bool IsRandomized(Algorithm a) {
  return a == Algorithm::kLar || a == Algorithm::kRla;
}

namespace internal {

// First maximum wins.
inline const OrderedSolution& BestOf(
    std::initializer_list<const OrderedSolution*> head,
    const std::vector<OrderedSolution>& tail = {}) {
  const OrderedSolution* best = nullptr;
  for (const OrderedSolution* c : head) {
    if (best == nullptr || c->value > best->value) best = c;
  }
  for (const OrderedSolution& c : tail) {
    if (c.value > best->value) best = &c;
  }
  return *best;
}

inline OrderedSolution Singleton(const Instance& instance, Element e,
                                 double value) {
  OrderedSolution s;
  s.elements = {e};
  s.total_cost = instance.cost(e);
  s.value = value;
  return s;
}

inline RunResult Finish(const OrderedSolution& sol, std::string_view name,
                        const AlgParams& params, const CountingOracle& oracle,
                        int64_t start_queries) {
  RunResult r;
  r.solution = sol.elements;
  r.value = sol.value;
  r.query_count = oracle.queries() - start_queries;
  r.params = params;
  r.algorithm = std::string(name);
  return r;
}

// prefix + argmax_{e in V, c(prefix + e) <= B} f(prefix + e). Members of the
// prefix are candidates too (value f(prefix), no query). If nothing fits the
// residual budget the prefix is returned unchanged.
inline OrderedSolution AugmentWithBest(const Instance& instance,
                                       CountingOracle& oracle,
                                       const OrderedSolution& prefix) {
  TrackedSet t = TrackedSet::From(oracle, instance.costs(), prefix);
  const double base = prefix.value;
  std::optional<Element> best;
  double best_value = 0.0;
  double best_gain = 0.0;
  for (Element e = 0; e < static_cast<Element>(instance.size()); ++e) {
    double v;
    double g = 0.0;
    if (t.contains(e)) {
      v = base;
    } else if (t.cost() + instance.cost(e) <= instance.budget()) {
      g = t.Gain(e);
      v = base + g;
    } else {
      continue;
    }
    if (!best || v > best_value) {
      best = e;
      best_value = v;
      best_gain = g;
    }
  }
  if (best && !t.contains(*best)) t.Add(*best, best_gain);
  return t.solution();
}

// Prefix boosting shared by dla and rla: for l = 0..steps, the longest
// prefix with cost <= eps' B (1 + eps')^l, augmented with its best element.
inline std::vector<OrderedSolution> BoostedPrefixes(
    const Instance& instance, CountingOracle& oracle,
    const OrderedSolution& sol, double eps_prime, int64_t steps) {
  std::vector<OrderedSolution> out;
  out.reserve(static_cast<std::size_t>(steps + 1));
  for (int64_t l = 0; l <= steps; ++l) {
    double cap = eps_prime * instance.budget() *
                 std::pow(1.0 + eps_prime, static_cast<double>(l));
    OrderedSolution prefix =
        MaxCostPrefix(sol, cap, instance.costs(), oracle);
    out.push_back(AugmentWithBest(instance, oracle, prefix));
  }
  return out;
}

// ceil(ln(1/eps') / eps'), the number of boosting steps.
inline int64_t BoostSteps(double eps_prime) {
  return static_cast<int64_t>(std::ceil(std::log(1.0 / eps_prime) / eps_prime));
}

}  // namespace internal

inline RunResult La(const Instance& instance, CountingOracle& oracle) {
  const int64_t start = oracle.queries();
  const double budget = instance.budget();
  if (instance.size() == 0) {
    return internal::Finish({}, "la", {}, oracle, start);
  }
  auto [e_max, f_max] = BestSingleton(instance, oracle);

  TrackedSet x(oracle, instance.costs());
  TrackedSet y(oracle, instance.costs());
  int64_t inspected = 0;
  for (Element e = 0; e < static_cast<Element>(instance.size()); ++e) {
    const double c = instance.cost(e);
    if (!(c <= budget / 2.0)) continue;
    ++inspected;
    const double gx = x.Gain(e);
    const double gy = y.Gain(e);
    const bool x_ok = gx / c >= x.value() / budget;
    const bool y_ok = gy / c >= y.value() / budget;
    if (x_ok && (!y_ok || gx / c >= gy / c)) {
      x.Add(e, gx);
    } else if (y_ok) {
      y.Add(e, gy);
    }
  }

  OrderedSolution x_tail =
      MaxCostSuffix(x.solution(), budget, instance.costs(), oracle);
  OrderedSolution y_tail =
      MaxCostSuffix(y.solution(), budget, instance.costs(), oracle);
  OrderedSolution single = internal::Singleton(instance, e_max, f_max);
  RunResult r = internal::Finish(
      internal::BestOf({&x_tail, &y_tail, &single}), "la", {}, oracle, start);
  r.candidates_inspected = inspected;
  r.admitted = static_cast<int64_t>(x.size() + y.size());
  return r;
}

inline RunResult La(const Instance& instance) {
  CountingOracle oracle(instance.objective());
  return La(instance, oracle);
}

// p and alpha come from params; the seed drives the "lar.sample" stream.
inline RunResult Lar(const Instance& instance, const AlgParams& params,
                     CountingOracle& oracle) {
  params.Validate();
  const int64_t start = oracle.queries();
  const double budget = instance.budget();
  if (instance.size() == 0) {
    return internal::Finish({}, "lar", params, oracle, start);
  }
  auto [e_max, f_max] = BestSingleton(instance, oracle);

  Rng sample = Rng(params.seed).Stream("lar.sample");
  TrackedSet s(oracle, instance.costs());
  int64_t inspected = 0;
  for (Element e = 0; e < static_cast<Element>(instance.size()); ++e) {
    const double c = instance.cost(e);
    if (!(c <= budget / 2.0)) continue;
    if (!sample.Bernoulli(params.p)) continue;
    ++inspected;
    const double g = s.Gain(e);
    if (g / c >= params.alpha * s.value() / budget) s.Add(e, g);
  }

  OrderedSolution tail =
      MaxCostSuffix(s.solution(), budget, instance.costs(), oracle);
  OrderedSolution single = internal::Singleton(instance, e_max, f_max);
  RunResult r = internal::Finish(internal::BestOf({&tail, &single}), "lar",
                                 params, oracle, start);
  r.candidates_inspected = inspected;
  r.admitted = static_cast<int64_t>(s.size());
  return r;
}

inline RunResult Lar(const Instance& instance, const AlgParams& params) {
  CountingOracle oracle(instance.objective());
  return Lar(instance, params, oracle);
}

inline RunResult Dla(const Instance& instance, const AlgParams& params,
                     CountingOracle& oracle) {
  params.Validate();
  const int64_t start = oracle.queries();
  const double budget = instance.budget();

  RunResult sub = La(instance, oracle);
  OrderedSolution s_prime;
  s_prime.elements = sub.solution;
  s_prime.total_cost = SetCost(instance.costs(), sub.solution);
  s_prime.value = sub.value;
  const double gamma = s_prime.value;
  if (!(gamma > 0.0)) {
    return internal::Finish(s_prime, "dla", params, oracle, start);
  }

  const double eps_prime = params.epsilon / 14.0;
  const int64_t steps = internal::BoostSteps(eps_prime);
  double theta = kLaFactor * gamma / (6.0 * eps_prime * budget);
  const double theta_min = gamma * (1.0 - eps_prime) / (6.0 * budget);

  TrackedSet x(oracle, instance.costs());
  TrackedSet y(oracle, instance.costs());
  int64_t passes = 0;
  int64_t inspected = 0;
  while (theta >= theta_min) {
    ++passes;
    for (Element e = 0; e < static_cast<Element>(instance.size()); ++e) {
      if (x.contains(e) || y.contains(e)) continue;
      ++inspected;
      const double c = instance.cost(e);
      TrackedSet* pick = nullptr;
      double pick_density = 0.0;
      double pick_gain = 0.0;
      for (TrackedSet* t : {&x, &y}) {
        if (!(t->cost() + c <= budget)) continue;
        const double g = t->Gain(e);
        const double d = g / c;
        if (d >= theta && (pick == nullptr || d > pick_density)) {
          pick = t;
          pick_density = d;
          pick_gain = g;
        }
      }
      if (pick != nullptr) {
        assert(!x.contains(e) && !y.contains(e));
        pick->Add(e, pick_gain);
      }
    }
    theta *= 1.0 - eps_prime;
  }

  std::vector<OrderedSolution> boosted = internal::BoostedPrefixes(
      instance, oracle, x.solution(), eps_prime, steps);
  std::vector<OrderedSolution> boosted_y = internal::BoostedPrefixes(
      instance, oracle, y.solution(), eps_prime, steps);
  boosted.insert(boosted.end(), boosted_y.begin(), boosted_y.end());

  RunResult r = internal::Finish(
      internal::BestOf({&s_prime, &x.solution(), &y.solution()}, boosted),
      "dla", params, oracle, start);
  r.candidates_inspected = inspected;
  r.admitted = static_cast<int64_t>(x.size() + y.size());
  r.threshold_passes = passes;
  return r;
}

inline RunResult Dla(const Instance& instance, const AlgParams& params) {
  CountingOracle oracle(instance.objective());
  return Dla(instance, params, oracle);
}

// The subroutine always runs Lar with the default p and alpha under the same
// seed, so Rla's first candidate equals Lar(instance, {seed}).
inline RunResult Rla(const Instance& instance, const AlgParams& params,
                     CountingOracle& oracle) {
  params.Validate();
  const int64_t start = oracle.queries();
  const double budget = instance.budget();

  AlgParams lar_params;
  lar_params.seed = params.seed;
  lar_params.epsilon = params.epsilon;
  RunResult sub = Lar(instance, lar_params, oracle);
  OrderedSolution s_prime;
  s_prime.elements = sub.solution;
  s_prime.total_cost = SetCost(instance.costs(), sub.solution);
  s_prime.value = sub.value;
  const double gamma = s_prime.value;
  if (!(gamma > 0.0)) {
    return internal::Finish(s_prime, "rla", params, oracle, start);
  }

  const double eps_prime = params.epsilon / 10.0;
  const int64_t steps = internal::BoostSteps(eps_prime);
  double theta = kLarFactor * gamma / (4.0 * eps_prime * budget);
  const double theta_min = gamma * (1.0 - eps_prime) / (4.0 * budget);

  Rng coin = Rng(params.seed).Stream("rla.coin");
  TrackedSet s(oracle, instance.costs());
  std::vector<bool> recorded(instance.size(), false);
  int64_t candidates = 0;
  int64_t passes = 0;
  while (theta >= theta_min) {
    ++passes;
    for (Element e = 0; e < static_cast<Element>(instance.size()); ++e) {
      if (recorded[e]) continue;
      const double c = instance.cost(e);
      if (!(s.cost() + c <= budget)) continue;
      const double g = s.Gain(e);
      if (!(g / c >= theta)) continue;
      recorded[e] = true;
      ++candidates;
      if (coin.Bernoulli(0.5)) s.Add(e, g);
    }
    theta *= 1.0 - eps_prime;
  }

  std::vector<OrderedSolution> boosted = internal::BoostedPrefixes(
      instance, oracle, s.solution(), eps_prime, steps);
  RunResult r = internal::Finish(
      internal::BestOf({&s_prime, &s.solution()}, boosted), "rla", params,
      oracle, start);
  r.candidates_inspected = candidates;
  r.admitted = static_cast<int64_t>(s.size());
  r.threshold_passes = passes;
  return r;
}

inline RunResult Rla(const Instance& instance, const AlgParams& params) {
  CountingOracle oracle(instance.objective());
  return Rla(instance, params, oracle);
}

// Repeatedly adds the feasible element of best positive density, then
// returns the better of that set and the best singleton. O(n^2) queries.
inline RunResult DensityGreedyBaseline(const Instance& instance,
                                       CountingOracle& oracle) {
  const int64_t start = oracle.queries();
  if (instance.size() == 0) {
    return internal::Finish({}, "baseline", {}, oracle, start);
  }
  auto [e_max, f_max] = BestSingleton(instance, oracle);
  TrackedSet s(oracle, instance.costs());
  int64_t inspected = 0;
  for (;;) {
    std::optional<Element> best;
    double best_density = 0.0;
    double best_gain = 0.0;
    for (Element e = 0; e < static_cast<Element>(instance.size()); ++e) {
      if (s.contains(e)) continue;
      const double c = instance.cost(e);
      if (!(s.cost() + c <= instance.budget())) continue;
      ++inspected;
      const double g = s.Gain(e);
      if (g > 0.0 && (!best || g / c > best_density)) {
        best = e;
        best_density = g / c;
        best_gain = g;
      }
    }
    if (!best) break;
    s.Add(*best, best_gain);
  }
  OrderedSolution single = internal::Singleton(instance, e_max, f_max);
  RunResult r = internal::Finish(internal::BestOf({&s.solution(), &single}),
                                 "baseline", {}, oracle, start);
  r.candidates_inspected = inspected;
  r.admitted = static_cast<int64_t>(s.size());
  return r;
}

inline RunResult DensityGreedyBaseline(const Instance& instance) {
  CountingOracle oracle(instance.objective());
  return DensityGreedyBaseline(instance, oracle);
}

// Exact optimum over all feasible subsets. Ties in value go to the
// lexicographically smallest ascending id sequence.
inline ExactResult Exhaustive(const Instance& instance,
                              CountingOracle& oracle) {
  const std::size_t n = instance.size();
  if (n > kExhaustiveLimit) {
    throw InvalidInput("exhaustive: n = " + std::to_string(n) +
                       " exceeds the enumeration limit of " +
                       std::to_string(kExhaustiveLimit));
  }
  ExactResult best;
  std::vector<Element> set;
  set.reserve(n);
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    set.clear();
    for (std::size_t e = 0; e < n; ++e) {
      if (mask >> e & 1) set.push_back(static_cast<Element>(e));
    }
    if (!Feasible(instance, set)) continue;
    const double v = oracle.Value(set);
    if (v > best.opt_value ||
        (v == best.opt_value && std::lexicographical_compare(
                                    set.begin(), set.end(),
                                    best.opt_set.begin(), best.opt_set.end()))) {
      best.opt_value = v;
      best.opt_set = set;
    }
  }
  for (Element e : best.opt_set) {
    if (!best.r || instance.cost(e) > instance.cost(*best.r)) best.r = e;
  }
  return best;
}

inline ExactResult Exhaustive(const Instance& instance) {
  CountingOracle oracle(instance.objective());
  return Exhaustive(instance, oracle);
}

inline RunResult Run(Algorithm algorithm, const Instance& instance,
                     const AlgParams& params, CountingOracle& oracle) {
  switch (algorithm) {
    case Algorithm::kLa: {
      RunResult r = La(instance, oracle);
      r.params = params;
      return r;
    }
    case Algorithm::kLar: return Lar(instance, params, oracle);
    case Algorithm::kDla: return Dla(instance, params, oracle);
    case Algorithm::kRla: return Rla(instance, params, oracle);
    case Algorithm::kBaseline: {
      RunResult r = DensityGreedyBaseline(instance, oracle);
      r.params = params;
      return r;
    }
    case Algorithm::kExhaustive: {
      const int64_t start = oracle.queries();
      ExactResult x = Exhaustive(instance, oracle);
      RunResult r;
      r.solution = x.opt_set;
      r.value = x.opt_value;
      r.query_count = oracle.queries() - start;
      r.params = params;
      r.algorithm = "exhaustive";
      return r;
    }
  }
  throw InvalidInput("unknown algorithm");
}

inline RunResult Run(Algorithm algorithm, const Instance& instance,
                     const AlgParams& params) {
  CountingOracle oracle(instance.objective());
  return Run(algorithm, instance, params, oracle);
}

}  // namespace smk
