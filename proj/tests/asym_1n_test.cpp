// Copyright 2026 The clonebench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clonebench/asym_1n.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "test_util.hpp"

namespace clonebench::asym1n {
namespace {

// Closed-form inverse of the frontier parametrization, used only as an oracle:
// (u, v) = (alpha sqrt((n+2)/2), beta sqrt(n/2)) is a fixed rotation of (x, y).
SandwichCoefficients rotation_oracle(int n, TradeoffParam p) {
  const double s = std::sqrt(2.0 * n + 2.0);
  const double u = (p.y * std::sqrt(n) + p.x * std::sqrt(n + 2.0)) / s;
  const double v = (p.x * std::sqrt(n) - p.y * std::sqrt(n + 2.0)) / s;
  return {u * std::sqrt(2.0 / (n + 2)), v * std::sqrt(2.0 / n)};
}

TEST(SandwichCloner, OneToThreeSymmetricPoint) {
  // beta = 0 is the universal symmetric 1 -> 3 cloner: every clone at 7/9.
  const auto cloner = build_sandwich(2, 1.0, 0.0);
  const auto f = numeric_fidelities(cloner, 200, 11);
  EXPECT_NEAR(f.a.mean, 7.0 / 9.0, 1e-10);
  EXPECT_NEAR(f.b.mean, 7.0 / 9.0, 1e-10);
  EXPECT_LT(f.a.stddev, 1e-10);
  EXPECT_LT(f.b_spread, 1e-10);
  const auto analytic = analytic_tradeoff(2, TradeoffParam::from_y(std::sqrt(1.0 / 3.0)));
  EXPECT_NEAR(analytic.a, 7.0 / 9.0, 1e-14);
  EXPECT_NEAR(analytic.b, 7.0 / 9.0, 1e-14);
}

TEST(SandwichCloner, EqualCoefficientsGivePerfectA) {
  for (int n = 2; n <= 5; ++n) {
    const auto f = numeric_fidelities(build_sandwich(n, 0.3, 0.3), 50, 3);
    EXPECT_NEAR(f.a.mean, 1.0, 1e-10) << n;
    EXPECT_NEAR(f.b.mean, 0.5, 1e-10) << n;
  }
}

TEST(SandwichCloner, TracePreservingOnMixedInputs) {
  Rng rng(17);
  for (int n = 2; n <= 4; ++n) {
    const auto cloner = build_sandwich(n, 0.7, -0.2);
    for (int t = 0; t < 10; ++t) {
      const auto rho = testing::random_density(SubsystemLayout{{"in", 2}}, rng);
      const auto out = cloner.apply(rho);
      EXPECT_NEAR(out.trace(), 1.0, 1e-12);
      EXPECT_GT(min_eigenvalue(out.matrix()), -1e-12);
      EXPECT_LT(out.op().hermiticity_residual(), 1e-13);
    }
  }
}

TEST(SandwichCloner, NormalizationMatchesClosedForm) {
  for (int n = 2; n <= 5; ++n) {
    const double alpha = 0.8, beta = -0.35;
    const auto cloner = build_sandwich(n, alpha, beta);
    const double trace = alpha * alpha * (n + 2) / 2.0 + beta * beta * n / 2.0;
    EXPECT_NEAR(cloner.norm_const(), 1.0 / trace, 1e-12) << n;
  }
}

TEST(SandwichCloner, RejectsInvalidInput) {
  EXPECT_THROW(build_sandwich(1, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(build_sandwich(3, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(analytic_tradeoff(1, TradeoffParam::from_y(0.2)), std::invalid_argument);
  EXPECT_THROW(TradeoffParam::from_y(1.2), std::invalid_argument);
  EXPECT_THROW(estimation_limit(0.75), std::invalid_argument);
}

TEST(ParamBridge, GridMatchesAnalyticTradeoff) {
  for (int n = 2; n <= 4; ++n) {
    const auto cg = cg_projectors(n);
    for (int i = 0; i < 50; ++i) {
      const auto p = TradeoffParam::from_y(i / 49.0);
      const auto c = param_bridge(cg, p);
      const auto expected = analytic_tradeoff(n, p);
      const auto f = numeric_fidelities(build_sandwich(cg, c.alpha, c.beta), 10, 1000 + i);
      EXPECT_NEAR(f.a.mean, expected.a, 1e-9) << "n=" << n << " y=" << p.y;
      EXPECT_NEAR(f.b.mean, expected.b, 1e-9) << "n=" << n << " y=" << p.y;
      EXPECT_LT(f.a.stddev, 1e-10);
      EXPECT_LT(f.b.stddev, 1e-10);
      EXPECT_LT(f.b_spread, 1e-9);

      const auto oracle = rotation_oracle(n, p);
      EXPECT_NEAR(c.alpha, oracle.alpha, 1e-7) << "n=" << n << " y=" << p.y;
      EXPECT_NEAR(c.beta, oracle.beta, 1e-7) << "n=" << n << " y=" << p.y;
    }
  }
}

TEST(ParamBridge, RelativeSignFlipsPastSymmetricPoint) {
  for (int n = 2; n <= 4; ++n) {
    const double y_sym = std::sqrt(n / (2.0 * n + 2.0));
    const auto below = param_bridge(n, TradeoffParam::from_y(0.5 * y_sym));
    const auto above = param_bridge(n, TradeoffParam::from_y(0.5 * (y_sym + 1.0)));
    EXPECT_GT(below.alpha * below.beta, 0.0);
    EXPECT_LT(above.alpha * above.beta, 0.0);
    const auto at = param_bridge(n, TradeoffParam::from_y(y_sym));
    EXPECT_NEAR(at.beta, 0.0, 1e-7);
  }
}

TEST(AnalyticTradeoff, MonotoneOnOptimalSegment) {
  for (int n = 2; n <= 6; ++n) {
    const double y_star = symmetric_optimum_y(n);
    FidelityPair prev = analytic_tradeoff(n, TradeoffParam::from_y(0.0));
    for (int i = 1; i <= 100; ++i) {
      const auto cur = analytic_tradeoff(n, TradeoffParam::from_y(y_star * i / 100.0));
      EXPECT_LT(cur.a, prev.a);
      EXPECT_GT(cur.b, prev.b);
      prev = cur;
    }
    EXPECT_NEAR(prev.b, (2.0 * n + 1.0) / (3.0 * n), 1e-12);
    const auto past = analytic_tradeoff(n, TradeoffParam::from_y(std::min(1.0, y_star + 1e-3)));
    EXPECT_LT(past.b, prev.b);
  }
}

TEST(AnalyticTradeoff, EndpointsAndKnownValues) {
  const auto start = analytic_tradeoff(3, TradeoffParam::from_y(0.0));
  EXPECT_DOUBLE_EQ(start.a, 1.0);
  EXPECT_DOUBLE_EQ(start.b, 0.5);
  const auto end = analytic_tradeoff(2, TradeoffParam::from_y(1.0));
  EXPECT_NEAR(end.a, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(end.b, 0.5 + 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(symmetric_optimum_y(2) * symmetric_optimum_y(2), 2.0 / 3.0, 1e-12);
  const auto peak = analytic_tradeoff(2, TradeoffParam::from_y(symmetric_optimum_y(2)));
  EXPECT_NEAR(peak.a, 5.0 / 9.0, 1e-12);
  EXPECT_NEAR(peak.b, 5.0 / 6.0, 1e-12);
}

TEST(EstimationLimit, LargeNConvergence) {
  for (double n : {1e2, 1e3, 1e4}) {
    for (int i = 0; i <= 20; ++i) {
      const double y = std::sqrt(0.5) * i / 20.0;
      const auto finite = analytic_tradeoff(static_cast<int>(n), TradeoffParam::from_y(y));
      const auto limit = estimation_limit(y);
      EXPECT_DOUBLE_EQ(finite.a, limit.a);
      EXPECT_LE(std::abs(finite.b - limit.b), 1.0 / n) << "n=" << n << " y=" << y;
    }
  }
  const auto top = estimation_limit(std::sqrt(0.5));
  EXPECT_NEAR(top.a, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(top.b, 2.0 / 3.0, 1e-15);
}

TEST(FrontierResidual, ZeroOnCurveAndDistanceOff) {
  for (int n : {2, 3, 5}) {
    for (int i = 0; i <= 40; ++i) {
      const auto f = analytic_tradeoff(n, TradeoffParam::from_y(i / 40.0));
      EXPECT_LT(frontier_residual(n, f), 1e-14) << n << " " << i;
    }
  }
  // Near y = 0 the curve runs along F^B, so moving F^A leaves it.
  const auto f = analytic_tradeoff(2, TradeoffParam::from_y(1e-6));
  EXPECT_NEAR(frontier_residual(2, {f.a - 1e-4, f.b}), 1e-4, 1e-6);
  EXPECT_GT(frontier_residual(2, {7.0 / 9.0, 0.6}), 0.1);
  // Rounding just below the F^B = 1/2 end still maps onto y = 0.
  EXPECT_LT(frontier_residual(2, {1.0 - 2.2e-16, 0.5 - 1.1e-16}), 1e-15);
  EXPECT_THROW(frontier_residual(1, f), std::invalid_argument);
}

}  // namespace
}  // namespace clonebench::asym1n
