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

#ifndef EXTFORM_FORMULATIONS_EXTRACT_H_
#define EXTFORM_FORMULATIONS_EXTRACT_H_

#include <vector>

#include "extform/formulations/handle.h"
#include "extform/graphs/graph.h"

namespace extform::formulations {

// Edges with lambda_e = 1, as a tree over the handle's nodes.
// Throws Error(kNonVertex) when lambda has an entry outside {0, 1} and
// Error(kSupportMismatch) when the 0/1 support is not a spanning tree.
graphs::Tree ExtractTree(const FormulationHandle& h, const std::vector<Rat>& x);

struct FundamentalCutReading {
  NodePair f;
  graphs::Cut cut;  // shore = {v : mu_{f,t_f,v} = 1}
};

// Reads, for every tree edge f of a Gomory-Hu or T-cut handle, the cut
// encoded by mu_{f,t_f,.} and x^f, and checks it against the fundamental cut
// of the extracted tree. Supports are compared when every capacity is
// positive; with zero-capacity edges only capacities are compared. Also checks
// that x^f carries no capacity for f outside the tree.
// Throws Error(kNonVertex) or Error(kSupportMismatch).
std::vector<FundamentalCutReading> ExtractFundamentalCuts(
    const FormulationHandle& h, const graphs::Graph& g,
    const std::vector<Rat>& x);

// The cut selected by the unique theta_g = 1 of a T-cut handle, read from
// y^g and checked to be the fundamental cut of g with |T cap U| odd.
// Throws Error(kNonVertex) or Error(kSupportMismatch).
graphs::Cut ExtractTCut(const FormulationHandle& h, const graphs::Graph& g,
                        const std::vector<Rat>& x);

}  // namespace extform::formulations

#endif  // EXTFORM_FORMULATIONS_EXTRACT_H_
