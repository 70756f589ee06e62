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

#include "extform/formulations/handle.h"

#include <nlohmann/json.hpp>

#include "extform/error.h"

namespace extform::formulations {

bool FormulationHandle::HasBlock(std::string_view symbol) const {
  for (const Block& b : blocks) {
    if (b.symbol == symbol) return true;
  }
  return false;
}

const Block& FormulationHandle::block(std::string_view symbol) const {
  for (const Block& b : blocks) {
    if (b.symbol == symbol) return b;
  }
  throw Error(ErrorCode::kNotFound,
              "formulation has no block '" + std::string(symbol) + "'");
}

int FormulationHandle::Var(std::string_view symbol, int offset) const {
  const Block& b = block(symbol);
  if (offset < 0 || offset >= b.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "offset out of range for block '" + b.symbol + "'");
  }
  return b.begin + offset;
}

void FormulationHandle::CheckBlocks() const {
  int next = 0;
  for (const Block& b : blocks) {
    if (b.begin != next || b.end < b.begin) {
      throw Error(ErrorCode::kInternal,
                  "block '" + b.symbol + "' does not continue the tiling");
    }
    for (const Block& other : blocks) {
      if (&other != &b && other.symbol == b.symbol) {
        throw Error(ErrorCode::kInternal, "repeated block '" + b.symbol + "'");
      }
    }
    next = b.end;
  }
  if (next != model.num_variables()) {
    throw Error(ErrorCode::kInternal, "blocks do not cover every variable");
  }
}

std::string FormulationHandle::BlockIndexJson() const {
  nlohmann::ordered_json doc;
  doc["kind"] = kind;
  doc["num_variables"] = model.num_variables();
  doc["num_constraints"] = model.num_constraints();
  doc["blocks"] = nlohmann::ordered_json::array();
  for (const Block& b : blocks) {
    nlohmann::ordered_json entry = {
        {"symbol", b.symbol}, {"begin", b.begin}, {"end", b.end}};
    if (b.size() > 0) {
      entry["first"] = model.variable(b.begin).name;
      entry["last"] = model.variable(b.end - 1).name;
    }
    doc["blocks"].push_back(entry);
  }
  auto label = [&](const NodePair& p) {
    return node_ids[p.first] + "," + node_ids[p.second];
  };
  if (!lambda_edges.empty()) {
    auto& list = doc["lambda_edges"] = nlohmann::ordered_json::array();
    for (const NodePair& p : lambda_edges) list.push_back(label(p));
  }
  if (!designated.empty()) {
    auto& list = doc["designated_endpoint"] = nlohmann::ordered_json::array();
    for (int t : designated) list.push_back(node_ids[t]);
  }
  if (root >= 0) doc["root"] = node_ids[root];
  if (!node_order.empty()) {
    auto& list = doc["node_order"] = nlohmann::ordered_json::array();
    for (int v : node_order) list.push_back(node_ids[v]);
  }
  return doc.dump(2);
}

void AddBlock(FormulationHandle& handle, std::string symbol, int begin,
              int end) {
  handle.blocks.push_back({std::move(symbol), begin, end});
}

}  // namespace extform::formulations
