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

#include "extform/verify/report.h"

#include <nlohmann/json.hpp>
#include <sstream>

#include "extform/ratlp/certificate.h"

namespace extform::verify {

bool CheckReport::passed() const { return num_failed() == 0; }

int CheckReport::num_failed() const {
  int failed = 0;
  for (const CheckEntry& c : checks_) failed += c.passed ? 0 : 1;
  return failed;
}

void CheckReport::Add(std::string name, bool passed, Rat lhs, Rat rhs,
                      std::string detail) {
  checks_.push_back({std::move(name), passed, std::move(lhs), std::move(rhs),
                     std::move(detail)});
}

void CheckReport::AddEqual(std::string name, const Rat& lhs, const Rat& rhs,
                           std::string detail) {
  Add(std::move(name), lhs == rhs, lhs, rhs, std::move(detail));
}

void CheckReport::AddLessEqual(std::string name, const Rat& lhs, const Rat& rhs,
                               std::string detail) {
  Add(std::move(name), lhs <= rhs, lhs, rhs, std::move(detail));
}

void CheckReport::AddAudit(const std::string& label, const ratlp::Model& model,
                           const ratlp::SolveOutcome& outcome) {
  ++num_audited_;
  for (const ratlp::AuditFinding& f : ratlp::AuditOutcome(model, outcome)) {
    Add(kSoundnessPrefix + label + "/" + f.check, f.passed, f.lhs, f.rhs,
        f.detail);
  }
}

void CheckReport::Merge(const CheckReport& other, const std::string& prefix) {
  for (const CheckEntry& c : other.checks_) {
    CheckEntry copy = c;
    if (!prefix.empty() && copy.name.rfind(kSoundnessPrefix, 0) != 0) {
      copy.name = prefix + copy.name;
    }
    checks_.push_back(std::move(copy));
  }
  num_audited_ += other.num_audited_;
}

std::string CheckReport::ToText() const {
  std::ostringstream out;
  out << instance_ << ": " << (passed() ? "pass" : "FAIL") << " ("
      << checks_.size() - num_failed() << "/" << checks_.size()
      << " checks)\n";
  for (const CheckEntry& c : checks_) {
    if (c.name.rfind(kSoundnessPrefix, 0) == 0 && c.passed) continue;
    out << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.name;
    if (c.lhs != 0 || c.rhs != 0) {
      out << "  " << FormatRat(c.lhs) << " vs " << FormatRat(c.rhs);
    }
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
  }
  return out.str();
}

std::string CheckReport::ToJson() const {
  nlohmann::ordered_json doc;
  doc["instance"] = instance_;
  doc["passed"] = passed();
  doc["lp_outcomes_audited"] = num_audited_;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckEntry& c : checks_) {
    doc["checks"].push_back({{"name", c.name},
                             {"passed", c.passed},
                             {"lhs", FormatRat(c.lhs)},
                             {"rhs", FormatRat(c.rhs)},
                             {"detail", c.detail}});
  }
  return doc.dump(2);
}

}  // namespace extform::verify
