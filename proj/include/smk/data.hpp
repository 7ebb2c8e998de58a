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

// Instance construction: edge-list and similarity-CSV ingestion, seeded
// generators, cost models and budget selection.
//
// Edge list: one edge per line, "u v [w]", whitespace separated, w defaults
// to 1. Lines starting with '#' and blank lines are ignored. Vertex ids are
// arbitrary non-negative integers and are densified in ascending order.
// Repeated edges (in either direction) are merged by summing weights.
//
// Similarity CSV: optional header row, then one row per element:
// "id,cost,s_0,...,s_{n-1}" where ids are 0..n-1 in any row order and s_j is
// the similarity to element j.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smk/core.hpp"
#include "smk/objectives.hpp"
#include "smk/random.hpp"

namespace smk {

class ParseError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

enum class ObjectiveKind { kRevenue, kSummarization, kCut };

inline std::string_view ObjectiveName(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::kRevenue: return "revenue";
    case ObjectiveKind::kSummarization: return "summarization";
    case ObjectiveKind::kCut: return "maxcut";
  }
  return "?";
}

inline std::optional<ObjectiveKind> ParseObjectiveKind(std::string_view s) {
  for (ObjectiveKind k : {ObjectiveKind::kRevenue,
                          ObjectiveKind::kSummarization, ObjectiveKind::kCut}) {
    if (ObjectiveName(k) == s) return k;
  }
  return std::nullopt;
}

namespace internal {

inline std::string Trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

inline bool ParseDouble(const std::string& s, double& out) {
  if (s.empty()) return false;
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (const std::exception&) {
    return false;
  }
}

inline bool ParseId(const std::string& s, int64_t& out) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  try {
    out = std::stoll(s);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

inline std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace internal

inline WeightedGraph ParseEdgeList(std::istream& in,
                                   std::string_view source = "<input>") {
  std::map<std::pair<int64_t, int64_t>, double> edges;
  std::map<int64_t, Element> ids;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError(std::string(source) + ":" + std::to_string(line_no) +
                     ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = internal::Trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream fields(t);
    std::vector<std::string> tok;
    for (std::string f; fields >> f;) tok.push_back(f);
    if (tok.size() < 2 || tok.size() > 3) {
      fail("expected \"u v [w]\", got \"" + t + "\"");
    }
    int64_t u = 0;
    int64_t v = 0;
    if (!internal::ParseId(tok[0], u) || !internal::ParseId(tok[1], v)) {
      fail("vertex ids must be non-negative integers");
    }
    double w = 1.0;
    if (tok.size() == 3 && !internal::ParseDouble(tok[2], w)) {
      fail("weight \"" + tok[2] + "\" is not a number");
    }
    if (!(w >= 0.0) || !std::isfinite(w)) fail("negative or non-finite weight");
    if (u == v) fail("self-loop on vertex " + std::to_string(u));
    edges[{std::min(u, v), std::max(u, v)}] += w;
    ids.emplace(u, 0);
    ids.emplace(v, 0);
  }
  Element next = 0;
  for (auto& [raw, dense] : ids) dense = next++;
  WeightedGraph g(ids.size());
  for (const auto& [key, w] : edges) g.AddEdge(ids[key.first], ids[key.second], w);
  return g;
}

inline WeightedGraph ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list \"" + path + "\"");
  return ParseEdgeList(in, path);
}

// Each edge once, as "u v w" with u < v, in adjacency order.
inline void WriteEdgeList(const WeightedGraph& g, std::ostream& out) {
  for (Element u = 0; u < static_cast<Element>(g.size()); ++u) {
    for (const Neighbor& nb : g.neighbors(u)) {
      if (nb.vertex > u) {
        out << u << ' ' << nb.vertex << ' '
            << internal::FormatDouble(nb.weight) << '\n';
      }
    }
  }
}

struct SimilarityData {
  SimilarityMatrix sim;
  std::vector<double> costs;
};

inline SimilarityData ParseSimilarityCsv(std::istream& in,
                                         std::string_view source = "<input>") {
  std::vector<std::vector<double>> rows;
  std::vector<int64_t> row_ids;
  std::string line;
  int line_no = 0;
  bool first_row = true;
  auto fail = [&](const std::string& what) {
    throw ParseError(std::string(source) + ":" + std::to_string(line_no) +
                     ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string t = internal::Trim(line);
    if (t.empty()) continue;
    const bool header_allowed = first_row;
    first_row = false;
    std::vector<std::string> cells;
    std::stringstream ss(t);
    for (std::string c; std::getline(ss, c, ',');) {
      cells.push_back(internal::Trim(c));
    }
    int64_t id = 0;
    if (!internal::ParseId(cells[0], id)) {
      if (header_allowed) continue;  // header row
      fail("element id \"" + cells[0] + "\" is not a non-negative integer");
    }
    if (cells.size() < 3) fail("expected id, cost and similarity columns");
    std::vector<double> values;
    for (std::size_t i = 1; i < cells.size(); ++i) {
      double v = 0.0;
      if (!internal::ParseDouble(cells[i], v)) {
        fail("cell \"" + cells[i] + "\" is not a number");
      }
      values.push_back(v);
    }
    row_ids.push_back(id);
    rows.push_back(std::move(values));
  }
  const std::size_t n = rows.size();
  std::vector<double> costs(n, 0.0);
  std::vector<double> sim(n * n, 0.0);
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    const int64_t id = row_ids[r];
    if (id < 0 || static_cast<std::size_t>(id) >= n || seen[id]) {
      throw ParseError(std::string(source) + ": ids must be a permutation of 0.." +
                       std::to_string(n - 1) + " (bad id " +
                       std::to_string(id) + ")");
    }
    seen[id] = true;
    if (rows[r].size() != n + 1) {
      throw ParseError(std::string(source) + ": row for id " +
                       std::to_string(id) + " has " +
                       std::to_string(rows[r].size() - 1) +
                       " similarity columns, expected " + std::to_string(n));
    }
    costs[id] = rows[r][0];
    std::copy(rows[r].begin() + 1, rows[r].end(), sim.begin() + id * n);
  }
  return {SimilarityMatrix(n, std::move(sim)), std::move(costs)};
}

inline SimilarityData ReadSimilarityCsvFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open similarity file \"" + path + "\"");
  return ParseSimilarityCsv(in, path);
}

inline void WriteSimilarityCsv(const SimilarityData& data, std::ostream& out) {
  const std::size_t n = data.sim.size();
  out << "id,cost";
  for (std::size_t j = 0; j < n; ++j) out << ",s" << j;
  out << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out << i << ',' << internal::FormatDouble(data.costs[i]);
    for (std::size_t j = 0; j < n; ++j) {
      out << ',' << internal::FormatDouble(data.sim.at(i, j));
    }
    out << '\n';
  }
}

enum class WeightDist { kUniform01, kUnit };

struct GeneratorSpec {
  std::size_t n = 0;
  double edge_prob = 0.2;
  uint64_t seed = 0;
  WeightDist weight_dist = WeightDist::kUniform01;
};

// Erdos-Renyi graph; pairs visited in (i, j), i < j order.
inline WeightedGraph GenEr(const GeneratorSpec& spec) {
  if (!(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0)) {
    throw InvalidInput("gen_er: edge probability must lie in [0, 1]");
  }
  Rng rng = Rng(spec.seed).Stream("gen.er");
  WeightedGraph g(spec.n);
  for (Element i = 0; i < static_cast<Element>(spec.n); ++i) {
    for (Element j = i + 1; j < static_cast<Element>(spec.n); ++j) {
      if (!rng.Bernoulli(spec.edge_prob)) continue;
      double w = spec.weight_dist == WeightDist::kUnit ? 1.0 : rng.Uniform();
      g.AddEdge(i, j, w);
    }
  }
  return g;
}

// Stand-in for image feature vectors: non-negative vectors scattered around
// a few cluster centres, compared by cosine similarity.
inline SimilarityMatrix GenSimilarity(std::size_t n, uint64_t seed,
                                      std::size_t dim = 32,
                                      std::size_t clusters = 6) {
  Rng rng = Rng(seed).Stream("gen.similarity");
  std::vector<std::vector<double>> centres(clusters, std::vector<double>(dim));
  for (auto& c : centres) {
    for (double& x : c) x = rng.Uniform();
  }
  std::vector<std::vector<double>> vecs(n, std::vector<double>(dim));
  for (auto& v : vecs) {
    const auto& c = centres[rng.Index(clusters)];
    for (std::size_t k = 0; k < dim; ++k) v[k] = c[k] * rng.Uniform(0.5, 1.5);
  }
  std::vector<double> sim(n * n, 0.0);
  std::vector<double> norm(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    norm[i] = std::sqrt(std::inner_product(vecs[i].begin(), vecs[i].end(),
                                           vecs[i].begin(), 0.0));
  }
  for (std::size_t i = 0; i < n; ++i) {
    sim[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      double dot = std::inner_product(vecs[i].begin(), vecs[i].end(),
                                      vecs[j].begin(), 0.0);
      double s = dot / (norm[i] * norm[j]);
      sim[i * n + j] = s;
      sim[j * n + i] = s;
    }
  }
  return SimilarityMatrix(n, std::move(sim));
}

// Costs drawn from U(lo, hi); a draw of exactly zero is redrawn.
inline std::vector<double> UniformCosts(std::size_t n, uint64_t seed,
                                        double lo = 0.0, double hi = 1.0) {
  Rng rng = Rng(seed).Stream("gen.cost");
  std::vector<double> costs(n);
  for (double& c : costs) {
    do {
      c = rng.Uniform(lo, hi);
    } while (!(c > 0.0));
  }
  return costs;
}

inline std::vector<double> RevenueCosts(const WeightedGraph& g,
                                        double mu = 0.2) {
  std::vector<double> costs(g.size());
  for (Element u = 0; u < static_cast<Element>(g.size()); ++u) {
    costs[u] = RevenueCost(g, u, mu);
  }
  return costs;
}

inline Instance BuildInstanceWithBudget(
    std::shared_ptr<const Objective> objective,
    const std::vector<double>& costs, double budget) {
  std::vector<Element> kept;
  for (Element e = 0; e < static_cast<Element>(costs.size()); ++e) {
    if (costs[e] <= budget) kept.push_back(e);
  }
  if (kept.empty()) {
    throw InvalidInput("every element costs more than the budget " +
                       internal::FormatDouble(budget));
  }
  if (kept.size() == costs.size()) {
    return Instance(std::move(objective), costs, budget);
  }
  std::vector<double> kept_costs;
  kept_costs.reserve(kept.size());
  for (Element e : kept) kept_costs.push_back(costs[e]);
  auto restricted =
      std::make_shared<RestrictedObjective>(std::move(objective), std::move(kept));
  return Instance(std::move(restricted), std::move(kept_costs), budget);
}

// B = fraction * total cost. Elements costing more than B are dropped and
// the objective is restricted to the survivors.
inline Instance BuildInstance(std::shared_ptr<const Objective> objective,
                              const std::vector<double>& costs,
                              double budget_fraction) {
  if (!(budget_fraction > 0.0 && budget_fraction <= 1.0)) {
    throw InvalidInput("budget fraction must lie in (0, 1]");
  }
  if (costs.size() != objective->size()) {
    throw InvalidInput("cost vector does not match the ground set");
  }
  const double total = std::accumulate(costs.begin(), costs.end(), 0.0);
  return BuildInstanceWithBudget(objective, costs, budget_fraction * total);
}

inline std::shared_ptr<const Objective> MakeObjective(ObjectiveKind kind,
                                                      WeightedGraph graph) {
  auto g = std::make_shared<const WeightedGraph>(std::move(graph));
  if (kind == ObjectiveKind::kRevenue) {
    return std::make_shared<RevenueObjective>(std::move(g));
  }
  if (kind == ObjectiveKind::kCut) {
    return std::make_shared<CutObjective>(std::move(g));
  }
  throw InvalidInput("summarization needs a similarity matrix, not a graph");
}

inline std::shared_ptr<const Objective> MakeObjective(SimilarityMatrix sim) {
  return std::make_shared<SummarizationObjective>(
      std::make_shared<const SimilarityMatrix>(std::move(sim)));
}

inline constexpr double kRandomEdgeProbs[] = {0.2, 0.5, 0.8};
inline constexpr double kRandomBudgetFractions[] = {0.05, 0.1, 0.25, 0.5};

// Small random instance of the given family for property and ratio tests:
//   maxcut   ER graph, p in {0.2, 0.5, 0.8}, U(0,1) weights, U(0.1,1) costs
//   revenue  same graph model, revenue cost model
//   summarization  synthetic similarity matrix, U(0.1,1) costs
// The budget is a fraction in {5%, 10%, 25%, 50%} of the total cost, raised
// to the cheapest element's cost when nothing would otherwise fit.
inline Instance GenRandomInstance(ObjectiveKind kind, std::size_t n,
                                  uint64_t seed) {
  if (n == 0) throw InvalidInput("random instance needs n >= 1");
  Rng rng = Rng(seed).Stream("gen.instance");
  const double p = kRandomEdgeProbs[rng.Index(3)];
  const double fraction = kRandomBudgetFractions[rng.Index(4)];
  const uint64_t sub_seed = rng.NextU64();

  std::shared_ptr<const Objective> objective;
  std::vector<double> costs;
  if (kind == ObjectiveKind::kSummarization) {
    objective = MakeObjective(GenSimilarity(n, sub_seed));
    costs = UniformCosts(n, sub_seed, 0.1, 1.0);
  } else {
    WeightedGraph g = GenEr({n, p, sub_seed, WeightDist::kUniform01});
    costs = kind == ObjectiveKind::kRevenue ? RevenueCosts(g)
                                            : UniformCosts(n, sub_seed, 0.1, 1.0);
    objective = MakeObjective(kind, std::move(g));
  }
  const double total = std::accumulate(costs.begin(), costs.end(), 0.0);
  const double cheapest = *std::min_element(costs.begin(), costs.end());
  return BuildInstanceWithBudget(objective, costs,
                                 std::max(fraction * total, cheapest));
}

inline Instance GenRandomSubmodularInstance(std::size_t n, uint64_t seed) {
  return GenRandomInstance(ObjectiveKind::kCut, n, seed);
}

}  // namespace smk
