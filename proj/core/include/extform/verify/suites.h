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

#ifndef EXTFORM_VERIFY_SUITES_H_
#define EXTFORM_VERIFY_SUITES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "extform/ratlp/simplex.h"
#include "extform/verify/checks.h"
#include "extform/verify/report.h"

namespace extform::verify {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct SuiteConfig {
  std::uint64_t seed = kDefaultSeed;
  ratlp::SolveOptions solve;
  // Instance counts and size limits of the seeded suites.
  int hull_instances = 100;
  int coupled_instances = 50;
  int tree_instances = 50;
  int tree_max_nodes = 7;
  int steiner_instances = 30;
  int steiner_max_nodes = 8;
  int steiner_max_terminals = 4;
  int gomory_hu_instances = 30;
  int gomory_hu_max_nodes = 6;
  int gomory_hu_enumerate_max_nodes = 6;
  int gh_extension_objectives = 10;
  int tcut_instances = 20;
  int tcut_max_nodes = 5;
  // Size audits cover n in [4, *_audit_max_nodes].
  int steiner_audit_max_nodes = 9;
  int gh_audit_max_nodes = 8;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckReport> reports;  // one per instance, in instance order
  std::vector<SizeSample> size_samples;
  double seconds = 0;

  bool passed() const;
  int num_failed_instances() const;
  int num_lp_outcomes() const;
  // LP soundness entries only: every audited outcome across the suite.
  int num_soundness_failures() const;
  std::string ToText(bool verbose) const;
  std::string ToJson() const;
};

// "hull", "coupled", "spanning-tree", "steiner", "gomory-hu",
// "gh-extension", "tcut".
const std::vector<std::string>& SuiteNames();

// Throws Error(kInvalidArgument) for an unknown name.
SuiteResult RunSuite(std::string_view name, const SuiteConfig& config);

}  // namespace extform::verify

#endif  // EXTFORM_VERIFY_SUITES_H_
