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

#ifndef EXTFORM_GRAPHS_BRUTE_FORCE_H_
#define EXTFORM_GRAPHS_BRUTE_FORCE_H_

#include <functional>
#include <vector>

#include "extform/graphs/graph.h"

namespace extform::graphs {

inline constexpr int kMaxEnumerationNodes = 12;
inline constexpr int kMaxSteinerOptionalNodes = 8;
inline constexpr int kMaxSpanningTreeNodes = 8;

struct TCutResult {
  Rat value;
  Cut cut;
};

// Minimum-capacity cut delta(U) with |T intersect U| odd, over all shores U
// not containing node 0. Ties keep the first shore in subset order.
// Throws Error(kOddTerminalSet) when |T| is odd or < 2 and
// Error(kSizeCapExceeded) above kMaxEnumerationNodes nodes.
TCutResult BruteForceMinTCut(const Graph& g, const std::vector<int>& terminals);

struct SteinerResult {
  Rat value;
  std::vector<int> edges;  // edge indices of G
};

// Enumerates node supersets of S and takes the cheapest spanning tree of a
// connected induced subgraph. Throws Error(kSizeCapExceeded) when
// |V \ S| > kMaxSteinerOptionalNodes.
SteinerResult BruteForceSteiner(const Graph& g, const std::vector<int>& terminals);

// Calls `visit` with every spanning tree of the complete graph on n nodes
// (Pruefer sequences). Throws Error(kSizeCapExceeded) above
// kMaxSpanningTreeNodes.
void ForEachSpanningTreeOfComplete(int n,
                                   const std::function<void(const Tree&)>& visit);

// Every spanning tree of G, as sorted edge-index lists.
std::vector<std::vector<int>> SpanningTreesOf(const Graph& g);

}  // namespace extform::graphs

#endif  // EXTFORM_GRAPHS_BRUTE_FORCE_H_
