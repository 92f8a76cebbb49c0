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

#ifndef QMETRIC_GAUSSIAN_H_
#define QMETRIC_GAUSSIAN_H_

#include <cstdint>

#include "qmetric/audit.h"

namespace qmetric {

// A normalized real Gaussian wavefunction
//
//   psi(x) = (pi sigma^2)^(-1/4) exp(-(x - mu)^2 / (2 sigma^2)),
//
// identified by its (mu, sigma) parameters. Construction enforces finite mu
// and finite sigma > 0; there is no way to hold an invalid state.
class GaussianState {
 public:
  // Throws Error(kInvalidArgument) if mu is not finite or sigma is not a
  // finite positive number.
  GaussianState(double mu, double sigma);

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }

  // Bitwise parameter equality.
  friend bool operator==(const GaussianState&, const GaussianState&) = default;

 private:
  double mu_;
  double sigma_;
};

// Two states are treated as the same point when each parameter is bitwise
// equal or within kSameStateRelativeTolerance relative difference.
inline constexpr double kSameStateRelativeTolerance = 1e-14;
bool SameParameters(const GaussianState& a, const GaussianState& b);

struct QuadratureConfig {
  // Truncation radius in units of the widest sigma involved.
  double half_width_sigmas = 10.0;
  // Number of Simpson subintervals.
  std::int64_t panels = 4096;

  // Throws Error(kConfigurationInvalid) unless half_width_sigmas >= 6 and
  // panels is even and >= 64.
  void Validate() const;
};

// psi_{mu,sigma}(x).
double Wavefunction(const GaussianState& state, double x);

// <a|b> from the closed form. In (0, 1]; exactly 1 for identical parameters
// and exactly symmetric in its arguments.
double OverlapClosedForm(const GaussianState& a, const GaussianState& b);

// <a|b> by composite Simpson integration of psi_a * psi_b over the narrower
// state's window [mu_n - W, mu_n + W], W = half_width_sigmas * sigma_n. The
// integrand outside it is below exp(-half_width_sigmas^2 / 2).
double OverlapQuadrature(const GaussianState& a, const GaussianState& b,
                         const QuadratureConfig& config = {});

// Integral of psi^2 over [mu - W, mu + W]; 1 up to quadrature error.
double NormSquaredQuadrature(const GaussianState& state,
                             const QuadratureConfig& config = {});

// The L2 distance ||psi_a - psi_b|| = sqrt(2 - 2 <a|b>). Lies in [0, sqrt 2)
// and is exactly 0 for identical parameters.
double L2Distance(const GaussianState& a, const GaussianState& b);

// Sampling box for randomized checks over the state space.
struct StateBox {
  double mu_lo = -10.0;
  double mu_hi = 10.0;
  double sigma_lo = 0.1;
  double sigma_hi = 10.0;

  // Throws Error(kInvalidArgument) on empty/non-finite ranges or
  // sigma_lo <= 0.
  void Validate() const;
};

// Randomized audit of the metric axioms of L2Distance over `samples`
// triples drawn uniformly from `box`: symmetry (exact), identity of
// indiscernibles, triangle inequality (slack 1e-12) and range [0, sqrt 2).
// The strict upper bound is only required for pairs whose overlap is at
// least 1e-15; numerically orthogonal pairs may sit exactly at sqrt 2.
AxiomAuditReport AuditMetricAxioms(std::int64_t samples, std::uint64_t seed,
                                   const StateBox& box = {});

}  // namespace qmetric

#endif  // QMETRIC_GAUSSIAN_H_
