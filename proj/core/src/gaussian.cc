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

#include "qmetric/gaussian.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qmetric/error.h"
#include "qmetric/quadrature.h"

namespace qmetric {
namespace {

constexpr double kTriangleSlack = 1e-12;
constexpr double kResolvableOverlap = 1e-15;

bool RelativelyEqual(double x, double y) {
  if (x == y) return true;
  const double scale = std::max(std::abs(x), std::abs(y));
  return std::abs(x - y) <= kSameStateRelativeTolerance * scale;
}

// Scale-free ingredients of the overlap, computed with the wider state as
// the reference so that nothing overflows and both argument orders produce
// bitwise-identical results.
struct OverlapTerms {
  double width_ratio;     // sigma_min / sigma_max, in (0, 1]
  double width_mismatch;  // (1 - r)^2 / (1 + r^2), in [0, 1)
  double exponent;        // (mu_1 - mu_2)^2 / (2 (sigma_1^2 + sigma_2^2))
};

OverlapTerms ComputeOverlapTerms(const GaussianState& a,
                                 const GaussianState& b) {
  const double wide = std::max(a.sigma(), b.sigma());
  const double narrow = std::min(a.sigma(), b.sigma());
  const double r = narrow / wide;
  const double one_plus_r2 = 1.0 + r * r;
  const double offset = std::abs(a.mu() - b.mu()) / wide;
  return {r, (1.0 - r) * (1.0 - r) / one_plus_r2,
          offset * offset / (2.0 * one_plus_r2)};
}

}  // namespace

GaussianState::GaussianState(double mu, double sigma) : mu_(mu), sigma_(sigma) {
  if (!std::isfinite(mu)) {
    throw Error(ErrorCode::kInvalidArgument, "mu must be finite");
  }
  if (!std::isfinite(sigma) || !(sigma > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "sigma must be positive");
  }
}

bool SameParameters(const GaussianState& a, const GaussianState& b) {
  return RelativelyEqual(a.mu(), b.mu()) && RelativelyEqual(a.sigma(), b.sigma());
}

void QuadratureConfig::Validate() const {
  if (!(half_width_sigmas >= 6.0) || !std::isfinite(half_width_sigmas)) {
    throw Error(ErrorCode::kConfigurationInvalid,
                "half_width_sigmas must be finite and >= 6");
  }
  if (panels < 64 || panels % 2 != 0) {
    throw Error(ErrorCode::kConfigurationInvalid,
                "panels must be even and >= 64");
  }
}

double Wavefunction(const GaussianState& state, double x) {
  const double z = (x - state.mu()) / state.sigma();
  const double norm =
      1.0 / std::sqrt(std::sqrt(std::numbers::pi) * state.sigma());
  return norm * std::exp(-0.5 * z * z);
}

double OverlapClosedForm(const GaussianState& a, const GaussianState& b) {
  const OverlapTerms t = ComputeOverlapTerms(a, b);
  const double r = t.width_ratio;
  return std::sqrt(2.0 * r / (1.0 + r * r)) * std::exp(-t.exponent);
}

double OverlapQuadrature(const GaussianState& a, const GaussianState& b,
                         const QuadratureConfig& config) {
  config.Validate();
  // The integrand is bounded by max(psi_wide) * psi_narrow, so outside the
  // narrower state's +-W sigma window it is below exp(-W^2 / 2). Integrating
  // over that window (a subset of [min(mu) - W sigma_max, max(mu) + W
  // sigma_max]) keeps the Simpson spacing proportional to the narrow width.
  const bool a_narrow = a.sigma() < b.sigma() ||
                        (a.sigma() == b.sigma() && a.mu() <= b.mu());
  const GaussianState& narrow = a_narrow ? a : b;
  const double w = config.half_width_sigmas * narrow.sigma();
  const double lo = narrow.mu() - w;
  const double hi = narrow.mu() + w;
  return IntegrateSimpson(
      [&](double x) { return Wavefunction(a, x) * Wavefunction(b, x); }, lo,
      hi, config.panels);
}

double NormSquaredQuadrature(const GaussianState& state,
                             const QuadratureConfig& config) {
  return OverlapQuadrature(state, state, config);
}

double L2Distance(const GaussianState& a, const GaussianState& b) {
  // 2 - 2<a|b> evaluated as -2 expm1(log <a|b>) so that nearby states keep
  // full relative precision instead of cancelling against 2.
  const OverlapTerms t = ComputeOverlapTerms(a, b);
  const double log_overlap = 0.5 * std::log1p(-t.width_mismatch) - t.exponent;
  const double squared = -2.0 * std::expm1(log_overlap);
  return std::sqrt(std::max(0.0, squared));
}

void StateBox::Validate() const {
  const bool finite = std::isfinite(mu_lo) && std::isfinite(mu_hi) &&
                      std::isfinite(sigma_lo) && std::isfinite(sigma_hi);
  if (!finite || mu_lo > mu_hi || sigma_lo > sigma_hi) {
    throw Error(ErrorCode::kInvalidArgument, "state box ranges are invalid");
  }
  if (!(sigma_lo > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "state box sigma lower bound must be positive");
  }
}

AxiomAuditReport AuditMetricAxioms(std::int64_t samples, std::uint64_t seed,
                                   const StateBox& box) {
  if (samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  }
  box.Validate();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mu_dist(box.mu_lo, box.mu_hi);
  std::uniform_real_distribution<double> sigma_dist(box.sigma_lo,
                                                    box.sigma_hi);
  auto draw = [&] {
    const double mu = mu_dist(rng);
    return GaussianState(mu, sigma_dist(rng));
  };

  CheckRecorder symmetry("symmetry");
  CheckRecorder identity("identity");
  CheckRecorder triangle("triangle_inequality");
  CheckRecorder range("range");

  auto pair_witness = [](const char* what, const GaussianState& a,
                         const GaussianState& b, double d) {
    return [=] {
      return Witness{what,
                     {{"mu_a", a.mu()},
                      {"sigma_a", a.sigma()},
                      {"mu_b", b.mu()},
                      {"sigma_b", b.sigma()},
                      {"distance", d}}};
    };
  };

  for (std::int64_t i = 0; i < samples; ++i) {
    const GaussianState a = draw();
    const GaussianState b = draw();
    const GaussianState c = draw();

    const double ab = L2Distance(a, b);
    const double ba = L2Distance(b, a);
    const double bc = L2Distance(b, c);
    const double ac = L2Distance(a, c);

    symmetry.Record(ab == ba, pair_witness("d(a,b) != d(b,a)", a, b, ab));

    identity.Record(L2Distance(a, a) == 0.0,
                    pair_witness("d(a,a) != 0", a, a, L2Distance(a, a)));
    identity.Record((ab == 0.0) == SameParameters(a, b),
                    pair_witness("d(a,b) = 0 disagrees with parameter equality",
                                 a, b, ab));
    // A neighbour displaced by 1e-12 relative in mu and sigma is a distinct
    // state and must be at positive distance.
    const GaussianState near(a.mu() + 1e-12 * std::max(1.0, std::abs(a.mu())),
                             a.sigma() * (1.0 + 1e-12));
    const double a_near = L2Distance(a, near);
    identity.Record(a_near > 0.0,
                    pair_witness("distinct nearby state at zero distance", a,
                                 near, a_near));

    triangle.Record(ac <= ab + bc + kTriangleSlack, [&] {
      return Witness{"d(a,c) > d(a,b) + d(b,c) + 1e-12",
                     {{"mu_a", a.mu()},
                      {"sigma_a", a.sigma()},
                      {"mu_b", b.mu()},
                      {"sigma_b", b.sigma()},
                      {"mu_c", c.mu()},
                      {"sigma_c", c.sigma()},
                      {"d_ac", ac},
                      {"d_ab", ab},
                      {"d_bc", bc}}};
    });

    const struct {
      const GaussianState& x;
      const GaussianState& y;
      double d;
    } pairs[] = {{a, b, ab}, {b, c, bc}, {a, c, ac}};
    for (const auto& p : pairs) {
      // Once the overlap drops below double resolution, 2 - 2<x|y> rounds to
      // 2 and the distance to sqrt 2 itself.
      const bool resolvable = OverlapClosedForm(p.x, p.y) >= kResolvableOverlap;
      const bool ok = p.d >= 0.0 && (resolvable ? p.d < std::numbers::sqrt2
                                                : p.d <= std::numbers::sqrt2);
      range.Record(ok, pair_witness("distance outside [0, sqrt 2)", p.x, p.y,
                                    p.d));
    }
  }

  AxiomAuditReport report;
  report.subject = "l2-distance metric axioms";
  report.checks.push_back(std::move(symmetry).Finish());
  report.checks.push_back(std::move(identity).Finish());
  report.checks.push_back(std::move(triangle).Finish());
  report.checks.push_back(std::move(range).Finish());
  return report;
}

}  // namespace qmetric
