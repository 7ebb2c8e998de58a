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

// Application objectives: social-network revenue, image summarization and
// weighted max cut. All three are non-negative, normalized, submodular and
// in general non-monotone.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "smk/core.hpp"

namespace smk {

struct Neighbor {
  Element vertex;
  double weight;

  bool operator==(const Neighbor&) const = default;
};

// Undirected graph; each edge is stored in both endpoint lists.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::size_t n) : adjacency_(n), weighted_degree_(n) {}

  void AddEdge(Element u, Element v, double w) {
    if (u == v) {
      throw InvalidInput("graph: self-loop on vertex " + std::to_string(u));
    }
    if (!(w >= 0.0)) {
      throw InvalidInput("graph: negative weight on edge (" +
                         std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= size() ||
        static_cast<std::size_t>(v) >= size()) {
      throw InvalidInput("graph: vertex out of range");
    }
    adjacency_[u].push_back({v, w});
    adjacency_[v].push_back({u, w});
    weighted_degree_[u] += w;
    weighted_degree_[v] += w;
    ++edges_;
  }

  std::size_t size() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_; }
  std::span<const Neighbor> neighbors(Element u) const {
    return adjacency_[u];
  }
  double weighted_degree(Element u) const { return weighted_degree_[u]; }

  bool operator==(const WeightedGraph&) const = default;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> weighted_degree_;
  std::size_t edges_ = 0;
};

// Dense symmetric similarity matrix with unit diagonal.
class SimilarityMatrix {
 public:
  SimilarityMatrix() = default;
  SimilarityMatrix(std::size_t n, std::vector<double> values)
      : n_(n), sim_(std::move(values)) {
    if (sim_.size() != n_ * n_) {
      throw InvalidInput("similarity: expected " + std::to_string(n_ * n_) +
                         " entries, got " + std::to_string(sim_.size()));
    }
    for (std::size_t u = 0; u < n_; ++u) {
      if (std::abs(at(u, u) - 1.0) > 1e-9) {
        throw InvalidInput("similarity: diagonal entry " + std::to_string(u) +
                           " is not 1");
      }
      for (std::size_t v = u + 1; v < n_; ++v) {
        if (std::abs(at(u, v) - at(v, u)) > 1e-9) {
          throw InvalidInput("similarity: not symmetric at (" +
                             std::to_string(u) + ", " + std::to_string(v) +
                             ")");
        }
      }
    }
  }

  std::size_t size() const { return n_; }
  double at(std::size_t u, std::size_t v) const { return sim_[u * n_ + v]; }
  std::span<const double> row(std::size_t u) const {
    return std::span(sim_).subspan(u * n_, n_);
  }

  bool operator==(const SimilarityMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> sim_;
};

// f(S) = sum_{u not in S} sqrt(sum_{v in S, (v,u) in E} w(u,v)).
class RevenueObjective : public Objective {
 public:
  explicit RevenueObjective(std::shared_ptr<const WeightedGraph> graph)
      : graph_(std::move(graph)) {}

  std::size_t size() const override { return graph_->size(); }

  double Evaluate(std::span<const Element> set) const override {
    std::vector<char> in(size(), 0);
    for (Element v : set) in[v] = 1;
    std::vector<double> acc(size(), 0.0);
    std::vector<Element> touched;
    for (Element v : set) {
      for (const Neighbor& nb : graph_->neighbors(v)) {
        if (in[nb.vertex]) continue;
        if (acc[nb.vertex] == 0.0) touched.push_back(nb.vertex);
        acc[nb.vertex] += nb.weight;
      }
    }
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    double total = 0.0;
    for (Element u : touched) total += std::sqrt(acc[u]);
    return total;
  }

  std::unique_ptr<ObjectiveState> NewState() const override {
    return std::make_unique<State>(graph_.get());
  }

  const WeightedGraph& graph() const { return *graph_; }

 private:
  // acc[u] is the weight from the current set into u.
  class State : public ObjectiveState {
   public:
    explicit State(const WeightedGraph* g)
        : g_(g), in_(g->size(), 0), acc_(g->size(), 0.0) {}

    double Gain(Element e) const override {
      double gain = -std::sqrt(acc_[e]);
      for (const Neighbor& nb : g_->neighbors(e)) {
        if (in_[nb.vertex]) continue;
        double a = acc_[nb.vertex];
        gain += std::sqrt(a + nb.weight) - std::sqrt(a);
      }
      return gain;
    }
    void Add(Element e) override {
      in_[e] = 1;
      for (const Neighbor& nb : g_->neighbors(e)) acc_[nb.vertex] += nb.weight;
    }

   private:
    const WeightedGraph* g_;
    std::vector<char> in_;
    std::vector<double> acc_;
  };

  std::shared_ptr<const WeightedGraph> graph_;
};

// Cost of a revenue-maximization node, 1 - exp(-mu * sqrt(weighted degree)).
// Isolated vertices get kRevenueCostFloor so every cost stays positive.
inline constexpr double kRevenueCostFloor = 1e-6;

inline double RevenueCost(const WeightedGraph& graph, Element u,
                          double mu = 0.2) {
  double c = 1.0 - std::exp(-mu * std::sqrt(graph.weighted_degree(u)));
  return c > kRevenueCostFloor ? c : kRevenueCostFloor;
}

// f(S) = sum_u max_{v in S} w(u,v) - (1/n) sum_u sum_{v in S} w(u,v),
// with the max over an empty S taken as 0. Self-similarity participates.
class SummarizationObjective : public Objective {
 public:
  explicit SummarizationObjective(std::shared_ptr<const SimilarityMatrix> sim)
      : sim_(std::move(sim)), column_sum_(sim_->size(), 0.0) {
    for (std::size_t u = 0; u < sim_->size(); ++u) {
      for (std::size_t v = 0; v < sim_->size(); ++v) {
        column_sum_[v] += sim_->at(u, v);
      }
    }
  }

  std::size_t size() const override { return sim_->size(); }

  double Evaluate(std::span<const Element> set) const override {
    if (set.empty()) return 0.0;
    const std::size_t n = size();
    double coverage = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      double best = -std::numeric_limits<double>::infinity();
      for (Element v : set) best = std::max(best, sim_->at(u, v));
      coverage += best;
    }
    double penalty = 0.0;
    for (Element v : set) penalty += column_sum_[v];
    return coverage - penalty / static_cast<double>(n);
  }

  std::unique_ptr<ObjectiveState> NewState() const override {
    return std::make_unique<State>(this);
  }

 private:
  class State : public ObjectiveState {
   public:
    explicit State(const SummarizationObjective* f)
        : f_(f),
          best_(f->size(), -std::numeric_limits<double>::infinity()) {}

    double Gain(Element e) const override {
      const SimilarityMatrix& sim = *f_->sim_;
      double gain = 0.0;
      if (empty_) {
        gain = f_->column_sum_[e];
      } else {
        for (std::size_t u = 0; u < best_.size(); ++u) {
          double s = sim.at(u, e);
          if (s > best_[u]) gain += s - best_[u];
        }
      }
      return gain - f_->column_sum_[e] / static_cast<double>(best_.size());
    }
    void Add(Element e) override {
      const SimilarityMatrix& sim = *f_->sim_;
      for (std::size_t u = 0; u < best_.size(); ++u) {
        best_[u] = std::max(best_[u], sim.at(u, e));
      }
      empty_ = false;
    }

   private:
    const SummarizationObjective* f_;
    std::vector<double> best_;
    bool empty_ = true;
  };

  std::shared_ptr<const SimilarityMatrix> sim_;
  std::vector<double> column_sum_;
};

// f(S) = total weight of edges with exactly one endpoint in S.
class CutObjective : public Objective {
 public:
  explicit CutObjective(std::shared_ptr<const WeightedGraph> graph)
      : graph_(std::move(graph)) {}

  std::size_t size() const override { return graph_->size(); }

  double Evaluate(std::span<const Element> set) const override {
    std::vector<char> in(size(), 0);
    for (Element v : set) in[v] = 1;
    double total = 0.0;
    for (Element v : set) {
      for (const Neighbor& nb : graph_->neighbors(v)) {
        if (!in[nb.vertex]) total += nb.weight;
      }
    }
    return total;
  }

  std::unique_ptr<ObjectiveState> NewState() const override {
    return std::make_unique<State>(graph_.get());
  }

  const WeightedGraph& graph() const { return *graph_; }

 private:
  // Gain is O(1): wdeg(e) - 2 * (weight from S into e).
  class State : public ObjectiveState {
   public:
    explicit State(const WeightedGraph* g) : g_(g), acc_(g->size(), 0.0) {}

    double Gain(Element e) const override {
      return g_->weighted_degree(e) - 2.0 * acc_[e];
    }
    void Add(Element e) override {
      for (const Neighbor& nb : g_->neighbors(e)) acc_[nb.vertex] += nb.weight;
    }

   private:
    const WeightedGraph* g_;
    std::vector<double> acc_;
  };

  std::shared_ptr<const WeightedGraph> graph_;
};

}  // namespace smk
