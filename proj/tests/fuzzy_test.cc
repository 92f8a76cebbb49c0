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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "qmetric/error.h"
#include "qmetric/solver.h"

namespace qmetric {
namespace {

constexpr TNormKind kAllKinds[] = {TNormKind::kMinimum, TNormKind::kProduct,
                                   TNormKind::kLukasiewicz};

TEST(TNormTest, Examples) {
  EXPECT_EQ(EvaluateTNorm(TNormKind::kMinimum, 0.3, 1.0), 0.3);
  EXPECT_EQ(EvaluateTNorm(TNormKind::kLukasiewicz, 0.5, 0.4), 0.0);
  EXPECT_NEAR(EvaluateTNorm(TNormKind::kProduct, 0.5, 0.4), 0.2, 1e-16);
  EXPECT_NEAR(EvaluateTNorm(TNormKind::kLukasiewicz, 0.8, 0.7), 0.5, 1e-15);
}

TEST(TNormTest, RejectsOutOfRangeArguments) {
  for (TNormKind kind : kAllKinds) {
    EXPECT_THROW(EvaluateTNorm(kind, -0.1, 0.5), Error);
    EXPECT_THROW(EvaluateTNorm(kind, 0.5, 1.1), Error);
    EXPECT_THROW(EvaluateTNorm(kind, NAN, 0.5), Error);
  }
}

TEST(TNormTest, CommutativeAndInRangeOnRandomPairs) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (TNormKind kind : kAllKinds) {
    for (int i = 0; i < 1000; ++i) {
      const double a = unit(rng), b = unit(rng);
      const double ab = EvaluateTNorm(kind, a, b);
      EXPECT_EQ(ab, EvaluateTNorm(kind, b, a));
      EXPECT_GE(ab, 0.0);
      EXPECT_LE(ab, 1.0);
    }
  }
}

TEST(TNormTest, ParseRoundTrip) {
  for (TNormKind kind : kAllKinds) {
    EXPECT_EQ(ParseTNormKind(ToString(kind)), kind);
  }
  EXPECT_FALSE(ParseTNormKind("bogus").has_value());
}

TEST(TNormAuditTest, BuiltInKindsPass) {
  for (TNormKind kind : kAllKinds) {
    const AxiomAuditReport report = AuditTNormAxioms(kind, 21);
    EXPECT_TRUE(report.passed()) << ToString(kind);
    EXPECT_EQ(report.find("associativity")->evaluated, 21 * 21 * 21);
    EXPECT_EQ(report.find("commutativity")->evaluated, 21 * 21);
  }
}

TEST(TNormAuditTest, BrokenOperationFailsCommutativity) {
  const AxiomAuditReport report =
      AuditTNormAxioms([](double a, double) { return a; }, 21, "left projection");
  EXPECT_FALSE(report.passed());
  const AxiomCheck* comm = report.find("commutativity");
  ASSERT_NE(comm, nullptr);
  EXPECT_FALSE(comm->passed());
  ASSERT_TRUE(comm->witness.has_value());
  const auto& v = comm->witness->values;
  EXPECT_NE(v[0].second, v[1].second);  // x != y
  EXPECT_TRUE(report.find("identity_element")->passed());
}

TEST(TNormAuditTest, MaximumIsNotATNorm) {
  // max violates the identity element axiom: max(x, 1) = 1.
  const AxiomAuditReport report = AuditTNormAxioms(
      [](double a, double b) { return std::max(a, b); }, 11, "maximum");
  EXPECT_FALSE(report.find("identity_element")->passed());
  EXPECT_TRUE(report.find("commutativity")->passed());
}

TEST(TNormAuditTest, ResolutionMustBeAtLeastFive) {
  EXPECT_THROW(AuditTNormAxioms(TNormKind::kProduct, 4), Error);
  EXPECT_NO_THROW(AuditTNormAxioms(TNormKind::kProduct, 5));
}

TEST(TNormAuditTest, Ordering) {
  EXPECT_TRUE(AuditTNormOrdering(21).passed());
  EXPECT_TRUE(AuditTNormOrdering(101).passed());
}

TEST(FuzzyMetricTest, MembershipExamples) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  EXPECT_EQ(fm.Membership(2.5, 2.5, 1.0), 1.0);
  EXPECT_EQ(fm.Membership(0.0, 1.0, 1.0), 0.5);
  EXPECT_EQ(fm.Membership(-3.0, 4.0, 0.0), 0.0);
  EXPECT_EQ(fm.Membership(2.5, 2.5, 0.0), 0.0);
  EXPECT_THROW(fm.Membership(0.0, 1.0, -1.0), Error);
}

TEST(FuzzyMetricTest, GaussianCarrierUsesL2Distance) {
  const FuzzyMetric<GaussianState> fm(GaussianCarrier(), TNormKind::kProduct);
  const GaussianState a(0, 1), b(2, 1);
  EXPECT_EQ(fm.Membership(a, b, 3.0), 3.0 / (3.0 + L2Distance(a, b)));
  EXPECT_EQ(fm.Membership(a, a, 1e-3), 1.0);
}

TEST(FuzzyMetricAuditTest, RealLineProduct) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  const AxiomAuditReport report = AuditFuzzyMetricAxioms(fm, 500, 12, 0);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.checks.size(), 6u);
}

TEST(FuzzyMetricAuditTest, RealLineMinimumAndLukasiewicz) {
  EXPECT_TRUE(AuditFuzzyMetricAxioms(
                  FuzzyMetric<double>(RealLineCarrier(), TNormKind::kMinimum),
                  500, 12, 1)
                  .passed());
  EXPECT_TRUE(AuditFuzzyMetricAxioms(
                  FuzzyMetric<double>(RealLineCarrier(), TNormKind::kLukasiewicz),
                  500, 12, 2)
                  .passed());
}

TEST(FuzzyMetricAuditTest, GaussianCarrierProduct) {
  const FuzzyMetric<GaussianState> fm(GaussianCarrier(), TNormKind::kProduct);
  EXPECT_TRUE(AuditFuzzyMetricAxioms(fm, 300, 10, 0).passed());
}

TEST(FuzzyMetricAuditTest, NonMetricBaseBreaksTriangleAxiom) {
  // Squared distance violates the triangle inequality, and the induced M
  // fails the fuzzy triangle axiom under the minimum t-norm.
  Carrier<double> squared = RealLineCarrier();
  squared.name = "squared distance";
  squared.distance = [](const double& x, const double& y) {
    return (x - y) * (x - y);
  };
  const FuzzyMetric<double> fm(squared, TNormKind::kMinimum);
  const AxiomAuditReport report = AuditFuzzyMetricAxioms(fm, 500, 12, 0);
  EXPECT_FALSE(report.find("axiom4_triangle")->passed());
  EXPECT_TRUE(report.find("axiom3_symmetry")->passed());
}

TEST(FuzzyMetricAuditTest, ArgumentChecks) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  EXPECT_THROW(AuditFuzzyMetricAxioms(fm, 9, 5, 0), Error);
  EXPECT_THROW(AuditFuzzyMetricAxioms(fm, 10, 4, 0), Error);
}

TEST(FuzzyMetricAuditTest, DeterministicPerSeed) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  const auto a = AuditFuzzyMetricAxioms(fm, 50, 6, 17);
  const auto b = AuditFuzzyMetricAxioms(fm, 50, 6, 17);
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].evaluated, b.checks[i].evaluated);
  }
}

TEST(FuzzyContractionTest, HalvingOnRealLine) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  const auto r = IterateFuzzyContraction(
      fm, [](double x) { return x / 2.0; }, 0.5, 8.0, 1e-13, 10'000);
  ASSERT_TRUE(r.converged);
  EXPECT_LE(std::abs(r.fixed_point), 1e-12);
  EXPECT_TRUE(r.condition_holds());
  EXPECT_LE(r.max_condition_gap, 1e-14);
}

TEST(FuzzyContractionTest, DyadicScalingHoldsWithEquality) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  for (double kappa : {0.5, 0.25, 0.125}) {
    const auto r = IterateFuzzyContraction(
        fm, [kappa](double x) { return kappa * x; }, kappa, 1.0, 1e-12, 10'000,
        2000, 5);
    EXPECT_TRUE(r.condition_holds()) << kappa;
    EXPECT_LE(r.max_condition_gap, 1e-14) << kappa;
  }
}

TEST(FuzzyContractionTest, InexactScalingHoldsToRoundoff) {
  // kappa * x rounds, so equality holds only to a few ulps of |x| / |x - y|.
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  for (double kappa : {0.1, 0.3, 0.75, 0.9}) {
    const auto r = IterateFuzzyContraction(
        fm, [kappa](double x) { return kappa * x; }, kappa, 1.0, 1e-12, 10'000,
        2000, 5);
    EXPECT_TRUE(r.converged) << kappa;
    EXPECT_LE(r.max_condition_gap, 1e-12) << kappa;
  }
}

TEST(FuzzyContractionTest, IdentityMapViolatesCondition) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  const auto r = IterateFuzzyContraction(
      fm, [](double x) { return x; }, 0.5, 3.0, 1e-12, 100);
  EXPECT_FALSE(r.condition_holds());
  ASSERT_TRUE(r.condition_audit.checks[0].witness.has_value());
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations_used, 1);
  EXPECT_EQ(r.fixed_point, 3.0);
}

TEST(FuzzyContractionTest, GaussianCarrierMatchesQuantumFixedPoint) {
  const AffineGaussianMap map(0.5, 0.0, 0.5, 0.5);
  const double k = EstimateLipschitz(map, DefaultCertificationBox(), 2000, 0);
  const FuzzyMetric<GaussianState> fm(GaussianCarrier(DefaultCertificationBox()),
                                      TNormKind::kProduct);
  const auto r = IterateFuzzyContraction(fm, map, k, GaussianState(4, 3),
                                         1e-12, 10'000);
  ASSERT_TRUE(r.converged);
  EXPECT_LE(L2Distance(r.fixed_point, AnalyticFixedPoint(map)), 1e-11);
  const auto quantum = IterateToFixedPoint(map, GaussianState(4, 3));
  EXPECT_LE(L2Distance(r.fixed_point, quantum.fixed_point), 1e-11);
}

TEST(FuzzyContractionTest, NonConvergenceIsReported) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  const auto r = IterateFuzzyContraction(
      fm, [](double x) { return 0.999 * x; }, 0.999, 5.0, 1e-12, 20);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations_used, 20);
}

TEST(FuzzyContractionTest, ArgumentChecks) {
  const FuzzyMetric<double> fm(RealLineCarrier(), TNormKind::kProduct);
  auto f = [](double x) { return x / 2.0; };
  EXPECT_THROW(IterateFuzzyContraction(fm, f, 0.0, 1.0, 1e-12, 10), Error);
  EXPECT_THROW(IterateFuzzyContraction(fm, f, 1.0, 1.0, 1e-12, 10), Error);
  EXPECT_THROW(IterateFuzzyContraction(fm, f, 0.5, 1.0, 0.0, 10), Error);
  EXPECT_THROW(IterateFuzzyContraction(fm, f, 0.5, 1.0, 1e-12, 0), Error);
}

}  // namespace
}  // namespace qmetric
