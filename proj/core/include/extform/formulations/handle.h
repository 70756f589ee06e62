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

#ifndef EXTFORM_FORMULATIONS_HANDLE_H_
#define EXTFORM_FORMULATIONS_HANDLE_H_

#include <string>
#include <string_view>
#include <vector>

#include "extform/graphs/graph.h"
#include "extform/ratlp/model.h"

namespace extform::formulations {

using graphs::MakePair;
using graphs::NodePair;

// Contiguous variable range [begin, end) holding one symbol.
struct Block {
  std::string symbol;
  int begin = 0;
  int end = 0;

  int size() const { return end - begin; }
};

// A built model plus the index needed to read solutions back.
//
// Block layouts used by the graph builders (N = node_ids.size(),
// M = graph_edges.size(), L = lambda_edges.size()):
//   lambda  k                         edge lambda_edges[k]
//   mu      (2k + side) * N + v       mu_{e_k, endpoint side, v}
//   x_f     k * M + e                 cut indicator of graph edge e for f_k
//   y_s     i * L + k                 path of node_order[i + 1]
//   alpha   i * L + k
//   nu, theta                         k
//   y_f     k * M + e
struct FormulationHandle {
  std::string kind;
  ratlp::Model model;
  std::vector<Block> blocks;

  std::vector<std::string> node_ids;
  std::vector<NodePair> graph_edges;
  std::vector<NodePair> lambda_edges;
  // Designated endpoint t_f per lambda edge (Gomory-Hu and T-cut builders).
  std::vector<int> designated;
  // T-cut builder: root r and the order (s_0, ..., s_k) of T \ {r}.
  int root = -1;
  std::vector<int> node_order;

  bool HasBlock(std::string_view symbol) const;
  // Throws Error(kNotFound).
  const Block& block(std::string_view symbol) const;
  int Var(std::string_view symbol, int offset) const;

  // Throws Error(kInternal) unless the blocks tile [0, num_variables).
  void CheckBlocks() const;

  // {"kind":..., "blocks":[{"symbol","begin","end","first","last"}], ...}
  std::string BlockIndexJson() const;
};

// Records the variables added since `begin` as a block.
void AddBlock(FormulationHandle& handle, std::string symbol, int begin,
              int end);

}  // namespace extform::formulations

#endif  // EXTFORM_FORMULATIONS_HANDLE_H_
