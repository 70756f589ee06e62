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

#ifndef EXTFORM_VERIFY_REPORT_H_
#define EXTFORM_VERIFY_REPORT_H_

#include <string>
#include <utility>
#include <vector>

#include "extform/ratlp/model.h"
#include "extform/ratlp/simplex.h"

namespace extform::verify {

struct CheckEntry {
  std::string name;
  bool passed = false;
  Rat lhs;
  Rat rhs;
  std::string detail;
};

// Named exact checks about one instance. Passes iff every check passes.
class CheckReport {
 public:
  explicit CheckReport(std::string instance = "") : instance_(std::move(instance)) {}

  const std::string& instance() const { return instance_; }
  void set_instance(std::string instance) { instance_ = std::move(instance); }
  const std::vector<CheckEntry>& checks() const { return checks_; }
  bool passed() const;
  int num_failed() const;

  void Add(std::string name, bool passed, Rat lhs = Rat(0), Rat rhs = Rat(0),
           std::string detail = "");
  void AddEqual(std::string name, const Rat& lhs, const Rat& rhs,
                std::string detail = "");
  void AddLessEqual(std::string name, const Rat& lhs, const Rat& rhs,
                    std::string detail = "");
  // One "lp-soundness" entry per certificate re-check of `outcome`.
  void AddAudit(const std::string& label, const ratlp::Model& model,
                const ratlp::SolveOutcome& outcome);
  void Merge(const CheckReport& other, const std::string& prefix = "");

  int num_audited() const { return num_audited_; }

  std::string ToText() const;
  std::string ToJson() const;

 private:
  std::string instance_;
  std::vector<CheckEntry> checks_;
  int num_audited_ = 0;
};

inline constexpr char kSoundnessPrefix[] = "lp-soundness/";

}  // namespace extform::verify

#endif  // EXTFORM_VERIFY_REPORT_H_
