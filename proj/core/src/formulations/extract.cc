// Copyright 2026 The extform Authors.
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

#include "extform/formulations/extract.h"

#include <string>

#include "extform/error.h"
#include "extform/graphs/algorithms.h"

namespace extform::formulations {
namespace {

bool IsZeroOne(const Rat& v) { return v == 0 || v == 1; }

bool HasZeroCapacity(const graphs::Graph& g) {
  for (const graphs::Edge& e : g.edges()) {
    if (sgn(e.c) == 0) return true;
  }
  return false;
}

// Compares the cut indicator `values` (one per graph edge) with `cut`.
void CheckIndicator(const graphs::Graph& g, const std::vector<Rat>& values,
                    const graphs::Cut& cut, const std::string& what) {
  Rat capacity;
  for (int e = 0; e < g.num_edges(); ++e) capacity += g.edge(e).c * values[e];
  if (HasZeroCapacity(g)) {
    if (capacity != cut.capacity) {
      throw Error(ErrorCode::kSupportMismatch,
                  what + ": capacity " + FormatRat(capacity) +
                      " differs from the cut capacity " +
                      FormatRat(cut.capacity));
    }
    return;
  }
  std::vector<bool> crossing(g.num_edges(), false);
  for (int e : cut.crossing) crossing[e] = true;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (values[e] != (crossing[e] ? 1 : 0)) {
      throw Error(ErrorCode::kSupportMismatch,
                  what + ": value " + FormatRat(values[e]) + " on edge " +
                      g.EdgeLabel(MakePair(g.edge(e).u, g.edge(e).v)) +
                      " disagrees with the cut " + graphs::ShoreLabel(g, cut));
    }
  }
}

std::vector<Rat> Slice(const std::vector<Rat>& x, int begin, int count) {
  return std::vector<Rat>(x.begin() + begin, x.begin() + begin + count);
}

}  // namespace

graphs::Tree ExtractTree(const FormulationHandle& h, const std::vector<Rat>& x) {
  const Block& lambda = h.block("lambda");
  std::vector<NodePair> edges;
  for (int k = 0; k < lambda.size(); ++k) {
    const Rat& v = x[lambda.begin + k];
    if (!IsZeroOne(v)) {
      throw Error(ErrorCode::kNonVertex,
                  "lambda" + std::string("[") +
                      h.node_ids[h.lambda_edges[k].first] + "," +
                      h.node_ids[h.lambda_edges[k].second] +
                      "] = " + FormatRat(v) + " is fractional");
    }
    if (v == 1) edges.push_back(h.lambda_edges[k]);
  }
  graphs::Tree tree = graphs::MakeTree(static_cast<int>(h.node_ids.size()),
                                       std::move(edges));
  // Steiner handles span only the terminal nodes.
  if (h.kind != "steiner-approx" && !graphs::IsSpanningTree(tree)) {
    throw Error(ErrorCode::kSupportMismatch,
                "lambda support is not a spanning tree");
  }
  return tree;
}

std::vector<FundamentalCutReading> ExtractFundamentalCuts(
    const FormulationHandle& h, const graphs::Graph& g,
    const std::vector<Rat>& x) {
  graphs::Tree tree = ExtractTree(h, x);
  const int n = g.num_nodes();
  const int num_g = g.num_edges();
  const Block& mu = h.block("mu");
  const Block& x_f = h.block("x_f");
  std::vector<FundamentalCutReading> readings;
  for (int k = 0; k < static_cast<int>(h.lambda_edges.size()); ++k) {
    const NodePair& f = h.lambda_edges[k];
    const std::string label = "x_f[" + g.EdgeLabel(f) + "]";
    std::vector<Rat> indicator = Slice(x, x_f.begin + k * num_g, num_g);
    if (!tree.Contains(f)) {
      Rat capacity;
      for (int e = 0; e < num_g; ++e) capacity += g.edge(e).c * indicator[e];
      if (sgn(capacity) != 0) {
        throw Error(ErrorCode::kSupportMismatch,
                    label + " carries capacity outside the tree");
      }
      continue;
    }
    const int side = h.designated[k] == f.first ? 0 : 1;
    std::vector<bool> shore(n);
    for (int v = 0; v < n; ++v) {
      const Rat& value = x[mu.begin + (2 * k + side) * n + v];
      if (!IsZeroOne(value)) {
        throw Error(ErrorCode::kNonVertex, "mu for " + g.EdgeLabel(f) +
                                               " is fractional");
      }
      shore[v] = value == 1;
    }
    graphs::Cut oracle = graphs::FundamentalCut(g, tree, f);
    if (shore != oracle.shore) {
      throw Error(ErrorCode::kSupportMismatch,
                  "mu for " + g.EdgeLabel(f) + " encodes shore " +
                      graphs::ShoreLabel(g, graphs::MakeCut(g, shore)) +
                      ", expected " + graphs::ShoreLabel(g, oracle));
    }
    CheckIndicator(g, indicator, oracle, label);
    readings.push_back({f, std::move(oracle)});
  }
  return readings;
}

graphs::Cut ExtractTCut(const FormulationHandle& h, const graphs::Graph& g,
                        const std::vector<Rat>& x) {
  graphs::Tree tree = ExtractTree(h, x);
  const Block& theta = h.block("theta");
  const Block& y_f = h.block("y_f");
  const int num_g = g.num_edges();
  int chosen = -1;
  for (int k = 0; k < theta.size(); ++k) {
    const Rat& v = x[theta.begin + k];
    if (!IsZeroOne(v)) {
      throw Error(ErrorCode::kNonVertex,
                  "theta is not a unit vector (" + FormatRat(v) + ")");
    }
    if (v == 1) {
      if (chosen >= 0) {
        throw Error(ErrorCode::kNonVertex, "theta selects two edges");
      }
      chosen = k;
    }
  }
  if (chosen < 0) throw Error(ErrorCode::kNonVertex, "theta selects no edge");
  const NodePair f = h.lambda_edges[chosen];
  if (!tree.Contains(f)) {
    throw Error(ErrorCode::kSupportMismatch,
                "selected edge " + g.EdgeLabel(f) + " is not a tree edge");
  }
  graphs::Cut cut = graphs::FundamentalCut(g, tree, f);
  int odd = 0;
  odd ^= cut.shore[h.root] ? 1 : 0;
  for (int s : h.node_order) odd ^= cut.shore[s] ? 1 : 0;
  if (!odd) {
    throw Error(ErrorCode::kSupportMismatch,
                "selected cut " + graphs::ShoreLabel(g, cut) +
                    " is not a T-cut");
  }
  CheckIndicator(g, Slice(x, y_f.begin + chosen * num_g, num_g), cut,
                 "y_f[" + g.EdgeLabel(f) + "]");
  for (int k = 0; k < theta.size(); ++k) {
    if (k == chosen) continue;
    Rat capacity;
    for (int e = 0; e < num_g; ++e) {
      capacity += g.edge(e).c * x[y_f.begin + k * num_g + e];
    }
    if (sgn(capacity) != 0) {
      throw Error(ErrorCode::kSupportMismatch,
                  "unselected y_f carries capacity " + FormatRat(capacity));
    }
  }
  return cut;
}

}  // namespace extform::formulations
