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

#ifndef EXTFORM_VERIFY_CHECKS_H_
#define EXTFORM_VERIFY_CHECKS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "extform/formulations/disjunctive.h"
#include "extform/formulations/gomory_hu.h"
#include "extform/formulations/handle.h"
#include "extform/graphs/graph.h"
#include "extform/ratlp/simplex.h"
#include "extform/verify/report.h"

namespace extform::verify {

// Unit lambda with x^k = x for the active piece and x^i = 0 elsewhere, for a
// solution of a BuildBalasHull handle.
CheckReport CheckBalasVertex(const formulations::FormulationHandle& hull,
                             const std::vector<Rat>& x);

// Hull optimum against the best single polyhedron, plus CheckBalasVertex on
// the basic optimum. Expects bounded, nonempty polyhedra.
CheckReport CheckHullInstance(const std::vector<formulations::PolyhedronDesc>& polys,
                              const std::vector<Rat>& w,
                              ratlp::ObjectiveSense sense,
                              const ratlp::SolveOptions& options = {});

// The coupling system C lambda + D mu >= d over free (lambda, mu) optimizing
// sum_i weights_i lambda_i.
ratlp::Model CouplingModel(const formulations::ExtensionDesc& coupling,
                           const std::vector<Rat>& weights,
                           ratlp::ObjectiveSense sense);

struct TwoPhaseResult {
  ratlp::SolveStatus status = ratlp::SolveStatus::kOptimal;
  Rat value;
  std::vector<ratlp::SolveStatus> subproblem_status;
  std::vector<Rat> subproblem_value;  // 0 unless optimal
};

// Optimizes each subproblem alone, then the coupling system weighted by the
// subproblem optima. Unbounded as soon as one subproblem is unbounded.
// An infeasible subproblem has its lambda fixed to 0. Every LP outcome is
// audited into `audits` when given.
TwoPhaseResult SolveTwoPhase(
    const std::vector<formulations::ExtensionDesc>& subproblems,
    const formulations::ExtensionDesc& coupling, const std::vector<Rat>& w,
    ratlp::ObjectiveSense sense, CheckReport* audits = nullptr,
    const ratlp::SolveOptions& options = {});

// The coupled system, with and without the aggregate x, against the
// two-phase value; statuses must agree and optima must be equal.
CheckReport CheckCoupledOptimality(
    const std::vector<formulations::ExtensionDesc>& subproblems,
    const formulations::ExtensionDesc& coupling, const std::vector<Rat>& w,
    ratlp::ObjectiveSense sense, const ratlp::SolveOptions& options = {});

// Split and arborescence tree LPs against Kruskal; the lambda block of the
// split optimum must be a spanning tree of that weight.
CheckReport CheckSpanningTree(const graphs::Graph& g,
                              const ratlp::SolveOptions& options = {});

// Steiner LP (both tree backends) against the minimum spanning tree of the
// metric closure on S and against twice the brute-force Steiner optimum.
CheckReport CheckSteiner(const graphs::Graph& g,
                         const std::vector<int>& terminals,
                         const ratlp::SolveOptions& options = {});

struct GomoryHuCheckOptions {
  // Compare against every spanning tree of K_n up to this many nodes.
  int enumerate_max_nodes = 6;
  ratlp::SolveOptions solve;
};

// Gomory-Hu LP against Gusfield's tree, the Gomory-Hu definition on the
// extracted tree, the path-minimum property for all pairs, the fundamental
// cuts read from mu and x^f, and (small n) all spanning trees.
CheckReport CheckGomoryHu(const graphs::Graph& g,
                          const GomoryHuCheckOptions& options = {});

// Optimizes each objective (over the lambda block, lexicographic pair order)
// across the Gomory-Hu tree polytope extension and compares with the best
// enumerated minimum-requirement tree. With `check_ranges`, also compares the
// range of every lambda coordinate.
CheckReport CheckGhExtension(const graphs::Graph& g,
                             const std::vector<std::vector<Rat>>& objectives,
                             bool check_ranges,
                             const ratlp::SolveOptions& options = {});

// T-cut LP against brute force; the cut read from y must be a T-cut of the
// optimal capacity.
CheckReport CheckTCut(const graphs::Graph& g, const std::vector<int>& terminals,
                      const formulations::TCutOptions& options = {});

// rows + columns + sum over nonzero coefficients, right-hand sides, finite
// bounds and objective terms of (1 + bit length).
std::size_t EncodingSize(const ratlp::Model& model);

enum class SizeAuditKind { kSteiner, kGomoryHuExtension };

struct SizeSample {
  int num_nodes = 0;
  int num_terminals = 0;
  int rows = 0;
  int cols = 0;
  std::size_t encoding = 0;
  Rat bound;  // (|G| + |S| + <c>) |S|^2, or n^4 + n^2 <c>
  Rat ratio;  // encoding / bound
};

struct SizeAuditResult {
  std::vector<SizeSample> samples;
  CheckReport report;
};

// Builds one model per n in [n_lo, n_hi] and checks encoding / bound against
// a fixed constant. Steiner instances are random connected graphs with
// ceil(n/2) random terminals; Gomory-Hu instances are complete graphs with
// random capacities, whose sizes must also grow monotonically.
SizeAuditResult SizeAudit(SizeAuditKind kind, int n_lo, int n_hi,
                          std::uint64_t seed);

// Constants the size audit holds the encoding-to-bound ratio to.
inline constexpr int kSteinerSizeConstant = 8;
inline constexpr int kGomoryHuSizeConstant = 12;

}  // namespace extform::verify

#endif  // EXTFORM_VERIFY_CHECKS_H_
