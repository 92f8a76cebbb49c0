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

#ifndef QMETRIC_SOLVER_H_
#define QMETRIC_SOLVER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "qmetric/audit.h"
#include "qmetric/gaussian.h"

namespace qmetric {

// Form-preserving map on Gaussian states acting affinely on the parameters:
//
//   (mu, sigma) -> (mean_scale * mu + mean_offset,
//                   width_scale * sigma + width_offset).
//
// Requires |mean_scale| < 1, 0 <= width_scale < 1 and width_offset > 0, which
// makes the parameter update a contraction whose fixed point
// (mean_offset / (1 - mean_scale), width_offset / (1 - width_scale)) has a
// strictly positive width.
class AffineGaussianMap {
 public:
  // Throws Error(kInvalidArgument) naming the violated coefficient.
  AffineGaussianMap(double mean_scale, double mean_offset, double width_scale,
                    double width_offset);

  double mean_scale() const { return mean_scale_; }
  double mean_offset() const { return mean_offset_; }
  double width_scale() const { return width_scale_; }
  double width_offset() const { return width_offset_; }

  GaussianState operator()(const GaussianState& state) const;

  friend bool operator==(const AffineGaussianMap&,
                         const AffineGaussianMap&) = default;

 private:
  double mean_scale_;
  double mean_offset_;
  double width_scale_;
  double width_offset_;
};

inline GaussianState ApplyMap(const AffineGaussianMap& map,
                              const GaussianState& state) {
  return map(state);
}

GaussianState AnalyticFixedPoint(const AffineGaussianMap& map);

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::int64_t kDefaultMaxIterations = 10'000;

// Pairs (and consecutive steps) closer than this are ignored when forming
// distance ratios.
inline constexpr double kLipschitzExclusion = 1e-12;
inline constexpr double kStepRatioFloor = 1e-13;

// Maximum of d(T x, T y) / d(x, y) over `samples` random pairs drawn
// uniformly from `region`. Pairs with d(x, y) < kLipschitzExclusion are
// skipped; throws Error(kDegenerateRegion) if every pair is skipped.
// Requires samples >= 100.
double EstimateLipschitz(const AffineGaussianMap& map, const StateBox& region,
                         std::int64_t samples, std::uint64_t seed);

struct FixedPointReport {
  // psi_0 .. psi_N where N = iterations_used.
  std::vector<GaussianState> iterates;
  // step_distances[n] = d(psi_{n+1}, psi_n), n = 0 .. N-1.
  std::vector<double> step_distances;
  // Largest observed ratio step_distances[n] / step_distances[n-1], over
  // steps whose predecessor is at least kStepRatioFloor; 0 when no ratio is
  // available.
  double k_estimate = 0.0;
  // k^n / (1 - k) * step_distances[0] for n = 0 .. N using k_estimate;
  // +infinity when k_estimate >= 1.
  std::vector<double> a_priori_bounds;
  GaussianState fixed_point{0.0, 1.0};
  bool converged = false;
  std::int64_t iterations_used = 0;
};

// Runs psi_{n+1} = T psi_n from `start` until d(psi_{n+1}, psi_n) <= tolerance
// or max_iterations applications. Non-convergence is reported through the
// `converged` flag, not an exception.
FixedPointReport IterateToFixedPoint(
    const AffineGaussianMap& map, const GaussianState& start,
    double tolerance = kDefaultTolerance,
    std::int64_t max_iterations = kDefaultMaxIterations);

inline constexpr double kBoundSlack = 1e-12;

// Checks the geometric step bound d(psi_{n+1}, psi_n) <= k^n d(psi_1, psi_0)
// and the Cauchy tail bound d(psi_n, psi*) <= k^n / (1 - k) d(psi_1, psi_0)
// along the whole trace, with report.fixed_point standing in for psi*.
// Throws Error(kInvalidContractionFactor) unless 0 <= k < 1.
AxiomAuditReport VerifyBanachBounds(const FixedPointReport& report, double k);

// Iterates from every start (concurrently) and checks that all limits agree
// pairwise within 10 * tolerance. Throws Error(kNotConverged) if any run fails
// to converge.
AxiomAuditReport VerifyUniqueness(
    const AffineGaussianMap& map, std::span<const GaussianState> starts,
    double tolerance = kDefaultTolerance,
    std::int64_t max_iterations = kDefaultMaxIterations);

// Reference maps and starting states used by the test and acceptance
// suites. Each map contracts the L2 distance on DefaultCertificationBox().
std::vector<AffineGaussianMap> DefaultMapFamily();
std::vector<GaussianState> DefaultStarts();
StateBox DefaultCertificationBox();

}  // namespace qmetric

#endif  // QMETRIC_SOLVER_H_
