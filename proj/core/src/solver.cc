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

#include "qmetric/solver.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <string>

#include "qmetric/error.h"

namespace qmetric {

AffineGaussianMap::AffineGaussianMap(double mean_scale, double mean_offset,
                                     double width_scale, double width_offset)
    : mean_scale_(mean_scale),
      mean_offset_(mean_offset),
      width_scale_(width_scale),
      width_offset_(width_offset) {
  if (!std::isfinite(mean_offset)) {
    throw Error(ErrorCode::kInvalidArgument, "b must be finite");
  }
  if (!(std::abs(mean_scale) < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "lambda must satisfy |lambda| < 1");
  }
  if (!(width_scale >= 0.0 && width_scale < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "eta must satisfy 0 <= eta < 1");
  }
  if (!(width_offset > 0.0) || !std::isfinite(width_offset)) {
    throw Error(ErrorCode::kInvalidArgument, "c must be positive");
  }
}

GaussianState AffineGaussianMap::operator()(const GaussianState& state) const {
  return GaussianState(mean_scale_ * state.mu() + mean_offset_,
                       width_scale_ * state.sigma() + width_offset_);
}

GaussianState AnalyticFixedPoint(const AffineGaussianMap& map) {
  return GaussianState(map.mean_offset() / (1.0 - map.mean_scale()),
                       map.width_offset() / (1.0 - map.width_scale()));
}

double EstimateLipschitz(const AffineGaussianMap& map, const StateBox& region,
                         std::int64_t samples, std::uint64_t seed) {
  region.Validate();
  if (samples < 100) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be >= 100");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mu_dist(region.mu_lo, region.mu_hi);
  std::uniform_real_distribution<double> sigma_dist(region.sigma_lo,
                                                    region.sigma_hi);

  auto draw = [&] {
    const double mu = mu_dist(rng);
    return GaussianState(mu, sigma_dist(rng));
  };

  double best = 0.0;
  std::int64_t used = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const GaussianState x = draw();
    const GaussianState y = draw();
    const double before = L2Distance(x, y);
    if (before < kLipschitzExclusion) continue;
    ++used;
    best = std::max(best, L2Distance(map(x), map(y)) / before);
  }
  if (used == 0) {
    throw Error(ErrorCode::kDegenerateRegion,
                "every sampled pair is closer than the exclusion threshold");
  }
  return best;
}

FixedPointReport IterateToFixedPoint(const AffineGaussianMap& map,
                                     const GaussianState& start,
                                     double tolerance,
                                     std::int64_t max_iterations) {
  if (!(tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iterations must be >= 1");
  }

  FixedPointReport report;
  report.iterates.push_back(start);
  GaussianState current = start;
  for (std::int64_t n = 0; n < max_iterations; ++n) {
    const GaussianState next = map(current);
    const double step = L2Distance(next, current);
    report.iterates.push_back(next);
    report.step_distances.push_back(step);
    current = next;
    if (step <= tolerance) {
      report.converged = true;
      break;
    }
  }
  report.iterations_used = static_cast<std::int64_t>(report.step_distances.size());
  report.fixed_point = current;

  const auto& steps = report.step_distances;
  for (std::size_t n = 1; n < steps.size(); ++n) {
    if (steps[n - 1] < kStepRatioFloor) continue;
    report.k_estimate = std::max(report.k_estimate, steps[n] / steps[n - 1]);
  }

  const double k = report.k_estimate;
  report.a_priori_bounds.reserve(report.iterates.size());
  for (std::size_t n = 0; n < report.iterates.size(); ++n) {
    report.a_priori_bounds.push_back(
        k < 1.0 ? std::pow(k, static_cast<double>(n)) / (1.0 - k) * steps[0]
                : std::numeric_limits<double>::infinity());
  }
  return report;
}

AxiomAuditReport VerifyBanachBounds(const FixedPointReport& report, double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw Error(ErrorCode::kInvalidContractionFactor,
                "k must satisfy 0 <= k < 1");
  }
  if (report.iterates.size() < 2 || report.step_distances.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "report must contain at least two iterates");
  }

  const double first_step = report.step_distances.front();
  auto power = [k](std::size_t n) {
    return std::pow(k, static_cast<double>(n));
  };

  CheckRecorder step_bound("step_bound");
  for (std::size_t n = 0; n < report.step_distances.size(); ++n) {
    const double step = report.step_distances[n];
    const double bound = power(n) * first_step;
    step_bound.Record(step <= bound + kBoundSlack, [&] {
      return Witness{"d(psi_{n+1}, psi_n) exceeds k^n d(psi_1, psi_0)",
                     {{"n", static_cast<double>(n)},
                      {"step_distance", step},
                      {"bound", bound},
                      {"k", k}}};
    });
  }

  CheckRecorder cauchy_bound("cauchy_bound");
  for (std::size_t n = 0; n < report.iterates.size(); ++n) {
    const double dist = L2Distance(report.iterates[n], report.fixed_point);
    const double bound = power(n) / (1.0 - k) * first_step;
    cauchy_bound.Record(dist <= bound + kBoundSlack, [&] {
      return Witness{"d(psi_n, psi*) exceeds k^n / (1 - k) d(psi_1, psi_0)",
                     {{"n", static_cast<double>(n)},
                      {"distance_to_fixed_point", dist},
                      {"bound", bound},
                      {"k", k}}};
    });
  }

  AxiomAuditReport audit;
  audit.subject = "banach bounds";
  audit.checks.push_back(std::move(step_bound).Finish());
  audit.checks.push_back(std::move(cauchy_bound).Finish());
  return audit;
}

AxiomAuditReport VerifyUniqueness(const AffineGaussianMap& map,
                                  std::span<const GaussianState> starts,
                                  double tolerance,
                                  std::int64_t max_iterations) {
  if (starts.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "at least two starts are required");
  }

  std::vector<std::future<FixedPointReport>> runs;
  runs.reserve(starts.size());
  for (const GaussianState& start : starts) {
    runs.push_back(std::async(std::launch::async, [&map, start, tolerance,
                                                   max_iterations] {
      return IterateToFixedPoint(map, start, tolerance, max_iterations);
    }));
  }

  std::vector<GaussianState> limits;
  limits.reserve(starts.size());
  for (std::size_t i = 0; i < runs.size(); ++i) {
    FixedPointReport r = runs[i].get();
    if (!r.converged) {
      throw Error(ErrorCode::kNotConverged,
                  "iteration from start " + std::to_string(i) +
                      " did not converge within " +
                      std::to_string(max_iterations) + " iterations");
    }
    limits.push_back(r.fixed_point);
  }

  const double threshold = 10.0 * tolerance;
  CheckRecorder agreement("fixed_point_agreement");
  for (std::size_t i = 0; i < limits.size(); ++i) {
    for (std::size_t j = i + 1; j < limits.size(); ++j) {
      const double d = L2Distance(limits[i], limits[j]);
      agreement.Record(d <= threshold, [&] {
        return Witness{"fixed points from two starts disagree",
                       {{"start_i", static_cast<double>(i)},
                        {"start_j", static_cast<double>(j)},
                        {"distance", d},
                        {"threshold", threshold}}};
      });
    }
  }

  AxiomAuditReport audit;
  audit.subject = "fixed point uniqueness";
  audit.checks.push_back(std::move(agreement).Finish());
  return audit;
}

std::vector<AffineGaussianMap> DefaultMapFamily() {
  return {
      AffineGaussianMap(0.5, 0.0, 0.5, 0.5),
      AffineGaussianMap(0.25, 1.0, 0.5, 1.0),
      AffineGaussianMap(-0.5, 2.0, 0.6, 0.8),
      AffineGaussianMap(0.5, -1.0, 0.6, 0.6),
      AffineGaussianMap(0.0, 3.0, 0.3, 0.7),
  };
}

std::vector<GaussianState> DefaultStarts() {
  return {GaussianState(4.0, 3.0), GaussianState(-6.0, 0.2),
          GaussianState(0.0, 10.0)};
}

StateBox DefaultCertificationBox() { return {-5.0, 5.0, 0.3, 5.0}; }

}  // namespace qmetric
