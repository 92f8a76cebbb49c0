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

#include "qmetric/fuzzy.h"

#include <algorithm>
#include <cmath>

namespace qmetric {
namespace {

std::vector<double> UnitGrid(int resolution) {
  if (resolution < 5) {
    throw Error(ErrorCode::kInvalidArgument, "grid resolution must be >= 5");
  }
  std::vector<double> grid(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) {
    grid[static_cast<std::size_t>(i)] =
        static_cast<double>(i) / static_cast<double>(resolution - 1);
  }
  return grid;
}

bool Close(double x, double y) {
  return std::abs(x - y) <= kTNormAuditTolerance;
}

}  // namespace

std::string_view ToString(TNormKind kind) {
  switch (kind) {
    case TNormKind::kMinimum:
      return "minimum";
    case TNormKind::kProduct:
      return "product";
    case TNormKind::kLukasiewicz:
      return "lukasiewicz";
  }
  return "unknown";
}

std::optional<TNormKind> ParseTNormKind(std::string_view name) {
  for (TNormKind kind :
       {TNormKind::kMinimum, TNormKind::kProduct, TNormKind::kLukasiewicz}) {
    if (name == ToString(kind)) return kind;
  }
  return std::nullopt;
}

double EvaluateTNorm(TNormKind kind, double a, double b) {
  if (!(a >= 0.0 && a <= 1.0) || !(b >= 0.0 && b <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "t-norm arguments must lie in [0, 1]");
  }
  switch (kind) {
    case TNormKind::kMinimum:
      return std::min(a, b);
    case TNormKind::kProduct:
      return a * b;
    case TNormKind::kLukasiewicz:
      return std::max(0.0, a + b - 1.0);
  }
  return 0.0;
}

AxiomAuditReport AuditTNormAxioms(TNormKind kind, int resolution) {
  return AuditTNormAxioms(
      [kind](double a, double b) { return EvaluateTNorm(kind, a, b); },
      resolution, std::string(ToString(kind)) + " t-norm axioms");
}

AxiomAuditReport AuditTNormAxioms(const BinaryOperation& op, int resolution,
                                  std::string subject) {
  const std::vector<double> grid = UnitGrid(resolution);

  CheckRecorder range("range");
  CheckRecorder commutativity("commutativity");
  CheckRecorder associativity("associativity");
  CheckRecorder monotonicity("monotonicity");
  CheckRecorder identity("identity_element");

  for (double x : grid) {
    const double x1 = op(x, 1.0);
    identity.Record(Close(x1, x), [&] {
      return Witness{"T(x, 1) != x", {{"x", x}, {"T(x,1)", x1}}};
    });
    for (double y : grid) {
      const double xy = op(x, y);
      const double yx = op(y, x);
      range.Record(xy >= 0.0 && xy <= 1.0, [&] {
        return Witness{"T(x, y) outside [0, 1]",
                       {{"x", x}, {"y", y}, {"T(x,y)", xy}}};
      });
      commutativity.Record(Close(xy, yx), [&] {
        return Witness{"T(x, y) != T(y, x)",
                       {{"x", x}, {"y", y}, {"T(x,y)", xy}, {"T(y,x)", yx}}};
      });
      for (double z : grid) {
        const double left = op(x, op(y, z));
        const double right = op(op(x, y), z);
        associativity.Record(Close(left, right), [&] {
          return Witness{"T(x, T(y, z)) != T(T(x, y), z)",
                         {{"x", x},
                          {"y", y},
                          {"z", z},
                          {"T(x,T(y,z))", left},
                          {"T(T(x,y),z)", right}}};
        });
        if (y <= z) {
          const double xz = op(x, z);
          monotonicity.Record(xy <= xz + kTNormAuditTolerance,
                      [&] {
            return Witness{"y <= z but T(x, y) > T(x, z)",
                           {{"x", x},
                            {"y", y},
                            {"z", z},
                            {"T(x,y)", xy},
                            {"T(x,z)", xz}}};
          });
        }
      }
    }
  }

  AxiomAuditReport report;
  report.subject = std::move(subject);
  report.checks.push_back(std::move(range).Finish());
  report.checks.push_back(std::move(commutativity).Finish());
  report.checks.push_back(std::move(associativity).Finish());
  report.checks.push_back(std::move(monotonicity).Finish());
  report.checks.push_back(std::move(identity).Finish());
  return report;
}

AxiomAuditReport AuditTNormOrdering(int resolution) {
  const std::vector<double> grid = UnitGrid(resolution);
  CheckRecorder ordering("lukasiewicz_le_product_le_minimum");
  for (double a : grid) {
    for (double b : grid) {
      const double luk = EvaluateTNorm(TNormKind::kLukasiewicz, a, b);
      const double prod = EvaluateTNorm(TNormKind::kProduct, a, b);
      const double min = EvaluateTNorm(TNormKind::kMinimum, a, b);
      ordering.Record(luk <= prod + kTNormAuditTolerance &&
                          prod <= min + kTNormAuditTolerance,
                      [&] {
        return Witness{"t-norm ordering violated",
                       {{"a", a},
                        {"b", b},
                        {"lukasiewicz", luk},
                        {"product", prod},
                        {"minimum", min}}};
      });
    }
  }
  AxiomAuditReport report;
  report.subject = "t-norm ordering";
  report.checks.push_back(std::move(ordering).Finish());
  return report;
}

Carrier<double> RealLineCarrier(double lo, double hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorCode::kInvalidArgument, "real line range is invalid");
  }
  return {"real line",
          [](const double& x, const double& y) { return std::abs(x - y); },
          [lo, hi](std::mt19937_64& rng) {
            return std::uniform_real_distribution<double>(lo, hi)(rng);
          }};
}

Carrier<GaussianState> GaussianCarrier(const StateBox& box) {
  box.Validate();
  return {"gaussian states",
          [](const GaussianState& a, const GaussianState& b) {
            return L2Distance(a, b);
          },
          [box](std::mt19937_64& rng) {
            const double mu =
                std::uniform_real_distribution<double>(box.mu_lo, box.mu_hi)(rng);
            const double sigma = std::uniform_real_distribution<double>(
                box.sigma_lo, box.sigma_hi)(rng);
            return GaussianState(mu, sigma);
          }};
}

}  // namespace qmetric
