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

// Instance model and the query-counted value oracle.
//
// Every algorithm talks to the objective exclusively through a
// CountingOracle, either by evaluating a whole set (Value) or through a
// TrackedSet whose Gain() charges one query per marginal-gain evaluation.
// f(empty) = 0 is free. The oracle keeps a single-entry cache of the last
// evaluated set, so asking for the same set twice in a row is charged once.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smk {

// Dense element id in [0, n).
using Element = int32_t;

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mutable incremental view of f over a growing set. Not thread-safe.
class ObjectiveState {
 public:
  virtual ~ObjectiveState() = default;
  // f(S + e) - f(S) for e not in S.
  virtual double Gain(Element e) const = 0;
  // Inserts e; e must not be present.
  virtual void Add(Element e) = 0;
};

// A non-negative, normalized set function over [0, size()).
// Implementations are immutable and may be shared across threads.
class Objective {
 public:
  virtual ~Objective() = default;
  virtual std::size_t size() const = 0;
  // From-scratch evaluation. Elements are distinct and in range.
  virtual double Evaluate(std::span<const Element> set) const = 0;
  virtual std::unique_ptr<ObjectiveState> NewState() const = 0;
};

// Objective backed by an arbitrary callable. The incremental state simply
// re-evaluates, which is fine for tests and small instances.
class SetFunctionObjective : public Objective {
 public:
  using Fn = std::function<double(std::span<const Element>)>;

  SetFunctionObjective(std::size_t n, Fn fn) : n_(n), fn_(std::move(fn)) {}

  std::size_t size() const override { return n_; }
  double Evaluate(std::span<const Element> set) const override {
    return set.empty() ? 0.0 : fn_(set);
  }
  std::unique_ptr<ObjectiveState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State : public ObjectiveState {
   public:
    explicit State(const SetFunctionObjective* f) : f_(f) {}
    double Gain(Element e) const override {
      std::vector<Element> with = set_;
      with.push_back(e);
      return f_->Evaluate(with) - value_;
    }
    void Add(Element e) override {
      set_.push_back(e);
      value_ = f_->Evaluate(set_);
    }

   private:
    const SetFunctionObjective* f_;
    std::vector<Element> set_;
    double value_ = 0.0;
  };

  std::size_t n_;
  Fn fn_;
};

// Restriction of an objective to a subset of its ground set, relabelled
// densely. Used when over-budget elements are dropped from an instance; the
// underlying function still ranges over its full ground set.
class RestrictedObjective : public Objective {
 public:
  RestrictedObjective(std::shared_ptr<const Objective> base,
                      std::vector<Element> kept)
      : base_(std::move(base)), kept_(std::move(kept)) {}

  std::size_t size() const override { return kept_.size(); }
  double Evaluate(std::span<const Element> set) const override {
    std::vector<Element> mapped;
    mapped.reserve(set.size());
    for (Element e : set) mapped.push_back(kept_[e]);
    return base_->Evaluate(mapped);
  }
  std::unique_ptr<ObjectiveState> NewState() const override {
    return std::make_unique<State>(base_->NewState(), &kept_);
  }

  const std::vector<Element>& kept() const { return kept_; }

 private:
  class State : public ObjectiveState {
   public:
    State(std::unique_ptr<ObjectiveState> inner,
          const std::vector<Element>* kept)
        : inner_(std::move(inner)), kept_(kept) {}
    double Gain(Element e) const override { return inner_->Gain((*kept_)[e]); }
    void Add(Element e) override { inner_->Add((*kept_)[e]); }

   private:
    std::unique_ptr<ObjectiveState> inner_;
    const std::vector<Element>* kept_;
  };

  std::shared_ptr<const Objective> base_;
  std::vector<Element> kept_;
};

class CountingOracle {
 public:
  explicit CountingOracle(std::shared_ptr<const Objective> objective)
      : objective_(std::move(objective)) {}

  // Not copyable: the counter belongs to exactly one run.
  CountingOracle(const CountingOracle&) = delete;
  CountingOracle& operator=(const CountingOracle&) = delete;

  const Objective& objective() const { return *objective_; }
  std::size_t size() const { return objective_->size(); }
  int64_t queries() const { return queries_; }

  double Value(std::span<const Element> set) {
    CheckRange(set);
    if (set.empty()) return 0.0;
    std::vector<Element> key(set.begin(), set.end());
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) {
      throw InvalidInput("oracle: duplicate element in query set");
    }
    if (cache_valid_ && key == cache_key_) return cache_value_;
    ++queries_;
    cache_value_ = objective_->Evaluate(set);
    cache_key_ = std::move(key);
    cache_valid_ = true;
    return cache_value_;
  }

  // f(e | S) given the caller's value of f(S). One query.
  double MarginalGain(Element e, std::span<const Element> set, double f_set) {
    CheckRange(set);
    CheckRange(std::span<const Element>(&e, 1));
    if (std::find(set.begin(), set.end(), e) != set.end()) {
      throw InvalidInput("marginal_gain: element " + std::to_string(e) +
                         " already in set");
    }
    std::vector<Element> with(set.begin(), set.end());
    with.push_back(e);
    ++queries_;
    cache_valid_ = false;
    return objective_->Evaluate(with) - f_set;
  }

  // One query against an incremental state; used by TrackedSet.
  double StateGain(const ObjectiveState& state, Element e) {
    ++queries_;
    cache_valid_ = false;
    return state.Gain(e);
  }

 private:
  void CheckRange(std::span<const Element> set) const {
    for (Element e : set) {
      if (e < 0 || static_cast<std::size_t>(e) >= objective_->size()) {
        throw InvalidInput("oracle: element id " + std::to_string(e) +
                           " out of range [0, " +
                           std::to_string(objective_->size()) + ")");
      }
    }
  }

  std::shared_ptr<const Objective> objective_;
  int64_t queries_ = 0;
  bool cache_valid_ = false;
  std::vector<Element> cache_key_;
  double cache_value_ = 0.0;
};

// The tuple (f, V, B). Immutable after construction.
class Instance {
 public:
  Instance(std::shared_ptr<const Objective> objective,
           std::vector<double> costs, double budget)
      : objective_(std::move(objective)),
        costs_(std::move(costs)),
        budget_(budget) {
    if (!(budget_ > 0.0)) throw InvalidInput("instance: budget must be > 0");
    if (costs_.size() != objective_->size()) {
      throw InvalidInput("instance: cost vector size " +
                         std::to_string(costs_.size()) +
                         " does not match ground set size " +
                         std::to_string(objective_->size()));
    }
    for (std::size_t e = 0; e < costs_.size(); ++e) {
      if (!(costs_[e] > 0.0)) {
        throw InvalidInput("instance: cost of element " + std::to_string(e) +
                           " must be > 0");
      }
      if (costs_[e] > budget_) {
        throw InvalidInput("instance: cost of element " + std::to_string(e) +
                           " exceeds the budget");
      }
    }
  }

  std::size_t size() const { return costs_.size(); }
  double budget() const { return budget_; }
  double cost(Element e) const { return costs_[e]; }
  std::span<const double> costs() const { return costs_; }
  const std::shared_ptr<const Objective>& objective() const {
    return objective_;
  }

 private:
  std::shared_ptr<const Objective> objective_;
  std::vector<double> costs_;
  double budget_;
};

// Sum of costs, accumulated in sequence order.
inline double SetCost(std::span<const double> costs,
                      std::span<const Element> set) {
  double total = 0.0;
  for (Element e : set) total += costs[e];
  return total;
}

inline bool Feasible(const Instance& instance, std::span<const Element> set) {
  return SetCost(instance.costs(), set) <= instance.budget();
}

// A set together with its insertion order, cost and value.
struct OrderedSolution {
  std::vector<Element> elements;
  double total_cost = 0.0;
  double value = 0.0;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
};

// A solution under construction, with an incremental objective state.
class TrackedSet {
 public:
  TrackedSet(CountingOracle& oracle, std::span<const double> costs)
      : oracle_(&oracle),
        costs_(costs),
        state_(oracle.objective().NewState()),
        member_(oracle.size(), false) {}

  // Rebuilds the state of an already evaluated solution without new queries.
  static TrackedSet From(CountingOracle& oracle, std::span<const double> costs,
                         const OrderedSolution& sol) {
    TrackedSet t(oracle, costs);
    for (Element e : sol.elements) {
      t.state_->Add(e);
      t.member_[e] = true;
    }
    t.sol_ = sol;
    return t;
  }

  // One oracle query.
  double Gain(Element e) { return oracle_->StateGain(*state_, e); }

  // Inserts e with its already paid-for gain.
  void Add(Element e, double gain) {
    state_->Add(e);
    member_[e] = true;
    sol_.elements.push_back(e);
    sol_.total_cost += costs_[e];
    sol_.value += gain;
  }

  bool contains(Element e) const { return member_[e]; }
  double cost() const { return sol_.total_cost; }
  double value() const { return sol_.value; }
  std::size_t size() const { return sol_.elements.size(); }
  const std::vector<Element>& elements() const { return sol_.elements; }
  const OrderedSolution& solution() const { return sol_; }

 private:
  CountingOracle* oracle_;
  std::span<const double> costs_;
  std::unique_ptr<ObjectiveState> state_;
  std::vector<bool> member_;
  OrderedSolution sol_;
};

inline OrderedSolution MakeSolution(CountingOracle& oracle,
                                    std::span<const double> costs,
                                    std::vector<Element> elements) {
  OrderedSolution sol;
  sol.total_cost = SetCost(costs, elements);
  sol.value = oracle.Value(elements);
  sol.elements = std::move(elements);
  return sol;
}

// argmax_e f({e}); ties go to the smallest id. Exactly n queries.
inline std::pair<Element, double> BestSingleton(const Instance& instance,
                                                CountingOracle& oracle) {
  if (instance.size() == 0) {
    throw InvalidInput("best_singleton: empty ground set");
  }
  Element best = 0;
  double best_value = 0.0;
  for (Element e = 0; e < static_cast<Element>(instance.size()); ++e) {
    double v = oracle.Value(std::span<const Element>(&e, 1));
    if (e == 0 || v > best_value) {
      best = e;
      best_value = v;
    }
  }
  return {best, best_value};
}

namespace internal {

// Packages a contiguous slice of sol, reusing the known value when the
// slice is the whole solution.
inline OrderedSolution Slice(const OrderedSolution& sol, std::size_t begin,
                             std::size_t end, std::span<const double> costs,
                             CountingOracle& oracle) {
  if (begin == 0 && end == sol.size()) return sol;
  std::vector<Element> part(sol.elements.begin() + begin,
                            sol.elements.begin() + end);
  return MakeSolution(oracle, costs, std::move(part));
}

}  // namespace internal

// Longest tail of the insertion sequence whose cost fits under cap.
inline OrderedSolution MaxCostSuffix(const OrderedSolution& sol, double cap,
                                     std::span<const double> costs,
                                     CountingOracle& oracle) {
  std::size_t begin = sol.size();
  double cost = 0.0;
  while (begin > 0 && cost + costs[sol.elements[begin - 1]] <= cap) {
    cost += costs[sol.elements[begin - 1]];
    --begin;
  }
  // Cost is reported in forward order; drop the head if rounding disagrees.
  while (begin < sol.size() &&
         SetCost(costs, std::span(sol.elements).subspan(begin)) > cap) {
    ++begin;
  }
  return internal::Slice(sol, begin, sol.size(), costs, oracle);
}

// Longest head of the insertion sequence whose cost fits under cap.
inline OrderedSolution MaxCostPrefix(const OrderedSolution& sol, double cap,
                                     std::span<const double> costs,
                                     CountingOracle& oracle) {
  std::size_t end = 0;
  double cost = 0.0;
  while (end < sol.size() && cost + costs[sol.elements[end]] <= cap) {
    cost += costs[sol.elements[end]];
    ++end;
  }
  return internal::Slice(sol, 0, end, costs, oracle);
}

}  // namespace smk
