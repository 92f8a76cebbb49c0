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

#ifndef QMETRIC_FUZZY_H_
#define QMETRIC_FUZZY_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qmetric/audit.h"
#include "qmetric/error.h"
#include "qmetric/gaussian.h"

namespace qmetric {

enum class TNormKind { kMinimum, kProduct, kLukasiewicz };

std::string_view ToString(TNormKind kind);
// Accepts "minimum", "product" and "lukasiewicz".
std::optional<TNormKind> ParseTNormKind(std::string_view name);

// Throws Error(kInvalidArgument) unless a, b are in [0, 1].
double EvaluateTNorm(TNormKind kind, double a, double b);

using BinaryOperation = std::function<double(double, double)>;

// Equality comparisons inside t-norm audits tolerate this much roundoff.
inline constexpr double kTNormAuditTolerance = 1e-12;

// Exhaustive check of commutativity, identity (pairs), associativity and
// monotonicity (triples) on the uniform grid {i / (resolution - 1)}.
// Requires resolution >= 5.
AxiomAuditReport AuditTNormAxioms(TNormKind kind, int resolution);
AxiomAuditReport AuditTNormAxioms(const BinaryOperation& op, int resolution,
                                  std::string subject);

// lukasiewicz <= product <= minimum at every grid pair.
AxiomAuditReport AuditTNormOrdering(int resolution);

// A classical metric space together with a way to draw random points from
// it. The sampler is what the randomized audits use to explore the carrier.
template <typename Point>
struct Carrier {
  std::string name;
  std::function<double(const Point&, const Point&)> distance;
  std::function<Point(std::mt19937_64&)> sample;
};

// Absolute difference on the real line; samples uniformly from [lo, hi].
Carrier<double> RealLineCarrier(double lo = -10.0, double hi = 10.0);
// Gaussian states under L2Distance; samples uniformly from `box`.
Carrier<GaussianState> GaussianCarrier(const StateBox& box = {});

// Standard fuzzy metric induced by a classical metric d:
// M(x, y, t) = t / (t + d(x, y)) for t > 0 and M(x, y, 0) = 0.
template <typename Point>
class FuzzyMetric {
 public:
  FuzzyMetric(Carrier<Point> carrier, TNormKind tnorm)
      : carrier_(std::move(carrier)), tnorm_(tnorm) {}

  const Carrier<Point>& carrier() const { return carrier_; }
  TNormKind tnorm() const { return tnorm_; }

  double Distance(const Point& x, const Point& y) const {
    return carrier_.distance(x, y);
  }

  // Throws Error(kInvalidArgument) for negative or NaN t.
  double Membership(const Point& x, const Point& y, double t) const {
    if (!(t >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "t must be >= 0");
    }
    if (t == 0.0) return 0.0;
    return t / (t + carrier_.distance(x, y));
  }

 private:
  Carrier<Point> carrier_;
  TNormKind tnorm_;
};

// t and s values for the randomized audits are drawn log-uniformly from
// [kAuditTMin, kAuditTMax].
inline constexpr double kAuditTMin = 1e-3;
inline constexpr double kAuditTMax = 1e3;
inline constexpr double kTriangleAxiomSlack = 1e-12;
// Continuity in t is probed by approaching t0 from both sides with relative
// offsets 2^-1 .. 2^-kContinuityRefinements. The discrepancies must shrink
// monotonically (up to kContinuityNoise) and end at most kContinuityTolerance.
inline constexpr int kContinuityRefinements = 30;
inline constexpr double kContinuityTolerance = 1e-6;
inline constexpr double kContinuityNoise = 1e-15;

namespace internal {

inline double SampleLogUniform(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> exponent(std::log(kAuditTMin),
                                                  std::log(kAuditTMax));
  return std::exp(exponent(rng));
}

}  // namespace internal

// Randomized audit of the five fuzzy metric axioms over `point_samples`
// random triples and `t_samples` values each of t and s. Deterministic for a
// given seed. Requires point_samples >= 10 and t_samples >= 5.
template <typename Point>
AxiomAuditReport AuditFuzzyMetricAxioms(const FuzzyMetric<Point>& fm,
                                        std::int64_t point_samples,
                                        std::int64_t t_samples,
                                        std::uint64_t seed) {
  if (point_samples < 10) {
    throw Error(ErrorCode::kInvalidArgument, "point_samples must be >= 10");
  }
  if (t_samples < 5) {
    throw Error(ErrorCode::kInvalidArgument, "t_samples must be >= 5");
  }

  std::mt19937_64 rng(seed);
  std::vector<double> ts(static_cast<std::size_t>(t_samples));
  std::vector<double> ss(static_cast<std::size_t>(t_samples));
  for (auto& t : ts) t = internal::SampleLogUniform(rng);
  for (auto& s : ss) s = internal::SampleLogUniform(rng);

  CheckRecorder range("range");
  CheckRecorder zero_at_origin("axiom1_zero_at_t0");
  CheckRecorder identity("axiom2_identity");
  CheckRecorder symmetry("axiom3_symmetry");
  CheckRecorder triangle("axiom4_triangle");
  CheckRecorder continuity("axiom5_continuity");

  auto witness = [](std::string what,
                    std::vector<std::pair<std::string, double>> values) {
    return [what = std::move(what), values = std::move(values)] {
      return Witness{what, values};
    };
  };

  for (std::int64_t i = 0; i < point_samples; ++i) {
    const Point x = fm.carrier().sample(rng);
    const Point y = fm.carrier().sample(rng);
    const Point z = fm.carrier().sample(rng);

    zero_at_origin.Record(fm.Membership(x, y, 0.0) == 0.0,
                          witness("M(x,y,0) != 0", {{"sample", double(i)}}));

    bool separated = false;
    for (double t : ts) {
      const double mxy = fm.Membership(x, y, t);
      const double myx = fm.Membership(y, x, t);
      const double mxx = fm.Membership(x, x, t);
      range.Record(mxy >= 0.0 && mxy <= 1.0,
                   witness("M(x,y,t) outside [0,1]", {{"t", t}, {"M", mxy}}));
      symmetry.Record(mxy == myx,
                      witness("M(x,y,t) != M(y,x,t)",
                              {{"t", t}, {"M_xy", mxy}, {"M_yx", myx}}));
      identity.Record(mxx == 1.0,
                      witness("M(x,x,t) != 1", {{"t", t}, {"M", mxx}}));
      separated = separated || mxy < 1.0;

      for (double s : ss) {
        const double lhs =
            EvaluateTNorm(fm.tnorm(), mxy, fm.Membership(y, z, s));
        const double rhs = fm.Membership(x, z, t + s);
        triangle.Record(lhs <= rhs + kTriangleAxiomSlack,
                        witness("M(x,y,t) * M(y,z,s) > M(x,z,t+s)",
                                {{"t", t}, {"s", s}, {"lhs", lhs},
                                 {"rhs", rhs}}));
      }

      const double m0 = mxy;
      for (double side : {-1.0, 1.0}) {
        double previous = 1.0;
        bool monotone = true;
        double gap = 0.0;
        for (int j = 1; j <= kContinuityRefinements; ++j) {
          const double tj = t * (1.0 + side * std::ldexp(1.0, -j));
          gap = std::abs(fm.Membership(x, y, tj) - m0);
          monotone = monotone && gap <= previous + kContinuityNoise;
          previous = gap;
        }
        continuity.Record(monotone && gap <= kContinuityTolerance,
                          witness("M(x,y,.) not continuous at t",
                                  {{"t", t}, {"side", side}, {"gap", gap}}));
      }
    }
    if (!(x == y)) {
      identity.Record(separated,
                      witness("M(x,y,t) = 1 at every sampled t for x != y",
                              {{"distance", fm.Distance(x, y)}}));
    }
  }

  AxiomAuditReport report;
  report.subject = "fuzzy metric axioms on " + fm.carrier().name + " with " +
                   std::string(ToString(fm.tnorm())) + " t-norm";
  report.checks.push_back(std::move(range).Finish());
  report.checks.push_back(std::move(zero_at_origin).Finish());
  report.checks.push_back(std::move(identity).Finish());
  report.checks.push_back(std::move(symmetry).Finish());
  report.checks.push_back(std::move(triangle).Finish());
  report.checks.push_back(std::move(continuity).Finish());
  return report;
}

// The contraction condition M(f x, f y, k t) >= M(x, y, t) is accepted with
// this much roundoff slack.
inline constexpr double kContractionConditionSlack = 1e-14;
inline constexpr std::int64_t kDefaultConditionSamples = 1000;

template <typename Point>
struct FuzzyFixedPointReport {
  explicit FuzzyFixedPointReport(Point start) : fixed_point(std::move(start)) {}

  std::vector<Point> iterates;
  // base distance between consecutive iterates
  std::vector<double> step_distances;
  Point fixed_point;
  bool converged = false;
  std::int64_t iterations_used = 0;
  double k = 0.0;
  AxiomAuditReport condition_audit;
  // max |M(f x, f y, k t) - M(x, y, t)| over the audited samples
  double max_condition_gap = 0.0;

  bool condition_holds() const { return condition_audit.passed(); }
};

// Audits the fuzzy contraction condition on `condition_samples` random pairs
// and t values, then iterates x_{n+1} = f(x_n) until the base distance
// between consecutive iterates is <= tolerance. A violated condition does
// not stop the iteration; it is reported in condition_audit.
template <typename Point, typename Map>
FuzzyFixedPointReport<Point> IterateFuzzyContraction(
    const FuzzyMetric<Point>& fm, const Map& f, double k, const Point& start,
    double tolerance, std::int64_t max_iterations,
    std::int64_t condition_samples = kDefaultConditionSamples,
    std::uint64_t seed = 0) {
  if (!(k > 0.0 && k < 1.0)) {
    throw Error(ErrorCode::kInvalidContractionFactor,
                "k must satisfy 0 < k < 1");
  }
  if (!(tolerance > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  if (max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iterations must be >= 1");
  }

  FuzzyFixedPointReport<Point> report(start);
  report.k = k;

  std::mt19937_64 rng(seed);
  CheckRecorder condition("contraction_condition");
  for (std::int64_t i = 0; i < condition_samples; ++i) {
    const Point x = fm.carrier().sample(rng);
    const Point y = fm.carrier().sample(rng);
    const double t = internal::SampleLogUniform(rng);
    const double after = fm.Membership(f(x), f(y), k * t);
    const double before = fm.Membership(x, y, t);
    report.max_condition_gap =
        std::max(report.max_condition_gap, std::abs(after - before));
    condition.Record(after >= before - kContractionConditionSlack, [&] {
      return Witness{"M(f x, f y, k t) < M(x, y, t)",
                     {{"t", t},
                      {"k", k},
                      {"distance", fm.Distance(x, y)},
                      {"M_image", after},
                      {"M_original", before}}};
    });
  }
  report.condition_audit.subject = "fuzzy contraction condition";
  report.condition_audit.checks.push_back(std::move(condition).Finish());

  report.iterates.push_back(start);
  Point current = start;
  for (std::int64_t n = 0; n < max_iterations; ++n) {
    Point next = f(current);
    const double step = fm.Distance(next, current);
    report.iterates.push_back(next);
    report.step_distances.push_back(step);
    current = std::move(next);
    if (step <= tolerance) {
      report.converged = true;
      break;
    }
  }
  report.iterations_used =
      static_cast<std::int64_t>(report.step_distances.size());
  report.fixed_point = current;
  return report;
}

}  // namespace qmetric

#endif  // QMETRIC_FUZZY_H_
