// Copyright 2026 The qmetric Authors
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

#ifndef QMETRIC_AUDIT_H_
#define QMETRIC_AUDIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qmetric {

// A counterexample recorded by an audit: a human-readable description plus
// the named numeric values that triggered it.
struct Witness {
  std::string description;
  std::vector<std::pair<std::string, double>> values;
};

// Outcome of one axiom or bound. Only the first violation is kept as the
// witness; `violations` counts all of them.
struct AxiomCheck {
  std::string name;
  std::int64_t evaluated = 0;
  std::int64_t violations = 0;
  std::optional<Witness> witness;

  bool passed() const { return violations == 0; }
};

struct AxiomAuditReport {
  std::string subject;
  std::vector<AxiomCheck> checks;

  bool passed() const;
  // Returns the named check, or nullptr.
  const AxiomCheck* find(const std::string& name) const;
};

// Accumulates evaluations for a single check.
class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) { check_.name = std::move(name); }

  // Records one evaluation. The witness factory is only invoked for the
  // first violation.
  template <typename WitnessFn>
  void Record(bool ok, WitnessFn&& make_witness) {
    ++check_.evaluated;
    if (ok) return;
    if (check_.violations++ == 0) check_.witness = make_witness();
  }

  AxiomCheck Finish() && { return std::move(check_); }

 private:
  AxiomCheck check_;
};

}  // namespace qmetric

#endif  // QMETRIC_AUDIT_H_
