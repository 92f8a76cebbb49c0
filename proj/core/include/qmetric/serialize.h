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

#ifndef QMETRIC_SERIALIZE_H_
#define QMETRIC_SERIALIZE_H_

#include <string_view>

#include <nlohmann/json.hpp>

#include "qmetric/audit.h"
#include "qmetric/compare.h"
#include "qmetric/fuzzy.h"
#include "qmetric/gaussian.h"
#include "qmetric/solver.h"

namespace qmetric {

inline constexpr int kReportSchemaVersion = 1;

// Non-finite doubles are written as null and read back as +infinity.
nlohmann::json Number(double value);
double NumberFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const GaussianState& state);
nlohmann::json ToJson(const AffineGaussianMap& map);
nlohmann::json ToJson(const StateBox& box);
nlohmann::json ToJson(const AxiomAuditReport& report);
nlohmann::json ToJson(const FixedPointReport& report);
nlohmann::json ToJson(const FeatureReport& report);
nlohmann::json ToJson(const FuzzyFixedPointReport<double>& report);
nlohmann::json ToJson(const FuzzyFixedPointReport<GaussianState>& report);

// Inverse mappings. Throw Error(kInvalidArgument) on malformed documents.
GaussianState GaussianStateFromJson(const nlohmann::json& j);
AffineGaussianMap AffineGaussianMapFromJson(const nlohmann::json& j);
AxiomAuditReport AxiomAuditReportFromJson(const nlohmann::json& j);
FixedPointReport FixedPointReportFromJson(const nlohmann::json& j);

// {"command", "inputs", "result", "version"} document emitted by the CLI.
nlohmann::json MakeEnvelope(std::string_view command, nlohmann::json inputs,
                            nlohmann::json result);

}  // namespace qmetric

#endif  // QMETRIC_SERIALIZE_H_
