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

#ifndef QMETRIC_COMPARE_H_
#define QMETRIC_COMPARE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qmetric/gaussian.h"
#include "qmetric/solver.h"

namespace qmetric {

// ||psi_a + psi_b||^2 - ||psi_a||^2 - ||psi_b||^2, which for normalized real
// states is 2 <a|b>. In (0, 2], symmetric.
double InterferenceExcess(const GaussianState& a, const GaussianState& b);

// The same quantity with every norm integrated numerically over the common
// interval [min(mu) - W, max(mu) + W].
double InterferenceExcessQuadrature(const GaussianState& a,
                                    const GaussianState& b,
                                    const QuadratureConfig& config = {});

struct QuantumRunSummary {
  GaussianState fixed_point{0.0, 1.0};
  bool converged = false;
  std::int64_t iterations_used = 0;
  double k_estimate = 0.0;
  double final_step_distance = 0.0;
};

struct FuzzyRunSummary {
  GaussianState fixed_point{0.0, 1.0};
  bool converged = false;
  std::int64_t iterations_used = 0;
  // Lipschitz estimate of the map over the region the iteration visits, and
  // the contraction factor actually handed to the fuzzy iteration.
  double lipschitz_estimate = 0.0;
  double k = 0.0;
  bool condition_holds = false;
  double max_condition_gap = 0.0;
  AxiomAuditReport condition_audit;
};

struct FeatureNote {
  std::string feature;
  std::string fuzzy;
  std::string quantum;
  std::string note;
};

struct FeatureReport {
  GaussianState probe_a{0.0, 1.0};
  GaussianState probe_b{1.0, 1.0};
  double interference_excess_quantum = 0.0;
  // The fuzzy framework has no superposition, hence no cross term.
  double interference_excess_fuzzy = 0.0;
  double interference_excess_quadrature = 0.0;
  QuantumRunSummary quantum;
  FuzzyRunSummary fuzzy;
  // L2 distance between the two frameworks' fixed points.
  double fixed_point_agreement = 0.0;
  std::vector<FeatureNote> notes;
};

inline constexpr std::int64_t kFeatureLipschitzSamples = 10'000;

// Runs the quantum iteration and the fuzzy iteration (same map, Gaussian
// carrier under L2Distance) side by side, evaluates the interference row on
// the probe pair and attaches the non-numeric comparison rows as notes.
// Throws Error(kNotConverged) if either iteration fails to converge.
FeatureReport BuildFeatureReport(
    const AffineGaussianMap& map, const GaussianState& start,
    const GaussianState& probe_a, const GaussianState& probe_b,
    double tolerance = kDefaultTolerance,
    std::int64_t max_iterations = kDefaultMaxIterations,
    std::uint64_t seed = 0);

}  // namespace qmetric

#endif  // QMETRIC_COMPARE_H_
