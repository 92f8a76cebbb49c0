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

#include "qmetric/compare.h"

#include <algorithm>
#include <cmath>
#include <future>

#include "qmetric/error.h"
#include "qmetric/fuzzy.h"
#include "qmetric/quadrature.h"

namespace qmetric {
namespace {

// The fuzzy iteration needs 0 < k < 1; a constant map has Lipschitz
// estimate 0 and a map that is not certified on the region estimates >= 1.
constexpr double kMinFuzzyK = 1e-6;
constexpr double kMaxFuzzyK = 1.0 - 1e-9;

// Box containing every iterate of `map` started at `start`: the mean error
// shrinks by |lambda| per step around mu*, and sigma moves monotonically from
// sigma_0 to sigma*.
StateBox TrajectoryBox(const AffineGaussianMap& map,
                       const GaussianState& start) {
  const GaussianState target = AnalyticFixedPoint(map);
  const double radius = std::max(std::abs(start.mu() - target.mu()), 0.5);
  const double sigma_lo = std::min(start.sigma(), target.sigma());
  const double sigma_hi = std::max(start.sigma(), target.sigma());
  return {target.mu() - radius, target.mu() + radius, 0.9 * sigma_lo,
          1.1 * sigma_hi};
}

std::vector<FeatureNote> ComparisonNotes() {
  return {
      {"completeness", "assumed axiomatically", "requires form preservation",
       "a hypothesis on the space, not a computed quantity"},
      {"contraction condition", "on M(x, y, t)", "on the L2 distance",
       "both computed: see the quantum and fuzzy run summaries"},
      {"interference", "no", "yes",
       "computed: see interference_excess_quantum and "
       "interference_excess_fuzzy"},
      {"phase sensitivity", "no", "yes (complex states)",
       "out of scope: only real-valued states are modelled"},
      {"topological protection", "no", "possible",
       "out of scope: no construction available"},
      {"conservation laws", "no", "possible",
       "out of scope: no construction available"},
  };
}

}  // namespace

double InterferenceExcess(const GaussianState& a, const GaussianState& b) {
  return 2.0 * OverlapClosedForm(a, b);
}

double InterferenceExcessQuadrature(const GaussianState& a,
                                    const GaussianState& b,
                                    const QuadratureConfig& config) {
  config.Validate();
  const double w = config.half_width_sigmas * std::max(a.sigma(), b.sigma());
  const double lo = std::min(a.mu(), b.mu()) - w;
  const double hi = std::max(a.mu(), b.mu()) + w;
  auto squared = [&](auto&& f) {
    return IntegrateSimpson(
        [&](double x) {
          const double v = f(x);
          return v * v;
        },
        lo, hi, config.panels);
  };
  const double sum = squared(
      [&](double x) { return Wavefunction(a, x) + Wavefunction(b, x); });
  const double norm_a = squared([&](double x) { return Wavefunction(a, x); });
  const double norm_b = squared([&](double x) { return Wavefunction(b, x); });
  return sum - norm_a - norm_b;
}

FeatureReport BuildFeatureReport(const AffineGaussianMap& map,
                                 const GaussianState& start,
                                 const GaussianState& probe_a,
                                 const GaussianState& probe_b,
                                 double tolerance,
                                 std::int64_t max_iterations,
                                 std::uint64_t seed) {
  auto quantum_run = std::async(std::launch::async, [&] {
    return IterateToFixedPoint(map, start, tolerance, max_iterations);
  });

  const double lipschitz = EstimateLipschitz(
      map, TrajectoryBox(map, start), kFeatureLipschitzSamples, seed);
  const double k = std::clamp(lipschitz, kMinFuzzyK, kMaxFuzzyK);
  const FuzzyMetric<GaussianState> fm(GaussianCarrier(TrajectoryBox(map, start)),
                                      TNormKind::kProduct);
  const auto fuzzy = IterateFuzzyContraction(
      fm, [&map](const GaussianState& s) { return map(s); }, k, start,
      tolerance, max_iterations, kDefaultConditionSamples, seed);

  const FixedPointReport quantum = quantum_run.get();
  if (!quantum.converged) {
    throw Error(ErrorCode::kNotConverged,
                "quantum iteration did not converge within " +
                    std::to_string(max_iterations) + " iterations");
  }
  if (!fuzzy.converged) {
    throw Error(ErrorCode::kNotConverged,
                "fuzzy iteration did not converge within " +
                    std::to_string(max_iterations) + " iterations");
  }

  FeatureReport report;
  report.probe_a = probe_a;
  report.probe_b = probe_b;
  report.interference_excess_quantum = InterferenceExcess(probe_a, probe_b);
  report.interference_excess_fuzzy = 0.0;
  report.interference_excess_quadrature =
      InterferenceExcessQuadrature(probe_a, probe_b);

  report.quantum = {quantum.fixed_point, quantum.converged,
                    quantum.iterations_used, quantum.k_estimate,
                    quantum.step_distances.back()};
  report.fuzzy = {fuzzy.fixed_point,     fuzzy.converged,
                  fuzzy.iterations_used, lipschitz,
                  k,                     fuzzy.condition_holds(),
                  fuzzy.max_condition_gap, fuzzy.condition_audit};
  report.fixed_point_agreement =
      L2Distance(quantum.fixed_point, fuzzy.fixed_point);
  report.notes = ComparisonNotes();
  return report;
}

}  // namespace qmetric
