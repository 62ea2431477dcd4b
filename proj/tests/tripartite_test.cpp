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

#include "clonebench/tripartite.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_util.hpp"

namespace clonebench::tripartite {
namespace {

using testing::max_abs_diff;

TripartiteCoeffs random_coeffs(int d, Rng& rng) {
  return make_coeffs(d, rng.uniform(), rng.uniform(), rng.uniform());
}

// Two-clone asymmetric cloner on A, B with one ancilla E:
//   alpha |psi>_A |Phi+>_BE + beta |psi>_B |Phi+>_AE,
// alpha^2 + beta^2 + (2/d) alpha beta = 1. Built independently of output_state.
StateVector bipartite_output(int d, double alpha, double beta, const StateVector& psi) {
  Vector out = Vector::Zero(d * d * d);
  const double inv = 1.0 / std::sqrt(static_cast<double>(d));
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int e = 0; e < d; ++e) {
        Complex amp = 0.0;
        if (b == e) amp += alpha * psi.amplitudes()(a) * inv;
        if (a == e) amp += beta * psi.amplitudes()(b) * inv;
        out((a * d + b) * d + e) = amp;
      }
    }
  }
  return StateVector(SubsystemLayout::uniform({"A", "B", "E"}, d), out);
}

TEST(NormalizeCoeffs, EqualRatiosQubit) {
  const auto c = normalize_coeffs(2, 1.0, 1.0);
  EXPECT_NEAR(c.alpha, 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(c.beta, 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_NEAR(c.gamma, 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_LT(std::abs(constraint_residual(c)), 1e-12);
}

TEST(NormalizeCoeffs, InfiniteRatioZeroesCoefficient) {
  const auto only_a = normalize_coeffs(3, kInfiniteRatio, kInfiniteRatio);
  EXPECT_DOUBLE_EQ(only_a.alpha, 1.0);
  EXPECT_DOUBLE_EQ(only_a.beta, 0.0);
  EXPECT_DOUBLE_EQ(only_a.gamma, 0.0);
  for (int d = 2; d <= 5; ++d) {
    const auto c = normalize_coeffs(d, 0.7, kInfiniteRatio);
    EXPECT_EQ(c.gamma, 0.0);
    EXPECT_NEAR(c.alpha * c.alpha + c.beta * c.beta + 2.0 / d * c.alpha * c.beta, 1.0, 1e-12);
    EXPECT_NEAR(c.alpha / c.beta, 0.7, 1e-12);
  }
}

TEST(NormalizeCoeffs, RejectsInvalidInput) {
  EXPECT_THROW(normalize_coeffs(2, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(normalize_coeffs(2, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(make_coeffs(2, 0.0, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(make_coeffs(2, 1.0, -0.1, 0.0), std::invalid_argument);
  EXPECT_THROW(make_coeffs(1, 1.0, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(validate({2, 0.5, 0.5, 0.5}), std::invalid_argument);
}

TEST(OutputState, UnitNormOnRandomCoefficients) {
  Rng rng(2024);
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 100; ++t) {
      const auto c = random_coeffs(d, rng);
      for (int s = 0; s < 20; ++s) {
        const auto out = output_state(c, haar_random_state(d, rng));
        ASSERT_NEAR(out.norm(), 1.0, 1e-10) << "d=" << d;
      }
    }
  }
}

TEST(OutputState, PerfectCloneBranch) {
  Rng rng(5);
  for (int d = 2; d <= 4; ++d) {
    const auto psi = haar_random_state(d, rng);
    const auto rho_a = reduced_state(output_state({d, 1.0, 0.0, 0.0}, psi), {"A"});
    EXPECT_LT(max_abs_diff(rho_a.matrix(), psi.amplitudes() * psi.amplitudes().adjoint()), 1e-14);
  }
}

TEST(OutputState, RejectsMismatch) {
  EXPECT_THROW(output_state({3, 1.0, 0.0, 0.0}, haar_random_state(2, 1)), std::invalid_argument);
  const auto unnormalized = StateVector(SubsystemLayout{{"psi", 2}}, Vector::Constant(2, 1.0));
  EXPECT_THROW(output_state({2, 1.0, 0.0, 0.0}, unnormalized), std::invalid_argument);
}

TEST(Fidelities, AnalyticKnownPoints) {
  for (int d = 2; d <= 6; ++d) {
    const auto f = fidelities_analytic({d, 1.0, 0.0, 0.0});
    EXPECT_DOUBLE_EQ(f[0], 1.0);
    EXPECT_NEAR(f[1], 1.0 / d, 1e-15);
    EXPECT_NEAR(f[2], 1.0 / d, 1e-15);
  }
  const auto sym = fidelities_analytic(normalize_coeffs(2, 1.0, 1.0));
  for (double f : sym) EXPECT_NEAR(f, 7.0 / 9.0, 1e-12);
}

TEST(Fidelities, NumericMatchesAnalyticAndIsUniversal) {
  Rng rng(77);
  for (int d : {2, 3, 5}) {
    const int trials = d == 5 ? 2 : 5;
    for (int t = 0; t < trials; ++t) {
      const auto c = t == 0 ? normalize_coeffs(d, 1.0, 1.0) : random_coeffs(d, rng);
      const auto numeric = fidelities_numeric(c, d == 5 ? 10 : 50, 100 + t);
      const auto analytic = fidelities_analytic(c);
      for (int x = 0; x < 3; ++x) {
        EXPECT_NEAR(numeric.clones[x].mean, analytic[x], 1e-9) << "d=" << d << " clone " << x;
        EXPECT_LT(numeric.clones[x].stddev, 1e-8);
        EXPECT_GE(numeric.clones[x].min, analytic[x] - 1e-9);
      }
      EXPECT_LT(numeric.norm_deviation, 1e-10);
    }
  }
}

TEST(Fidelities, GammaZeroReducesToBipartiteCloner) {
  Rng rng(8);
  for (int d : {2, 3, 5}) {
    for (double ratio : {0.3, 1.0, 2.5}) {
      const auto c = normalize_coeffs(d, ratio, kInfiniteRatio);
      const auto tri = fidelities_numeric(c, 10, 9);
      for (int s = 0; s < 5; ++s) {
        const auto psi = haar_random_state(d, rng);
        const auto bip = bipartite_output(d, c.alpha, c.beta, psi);
        ASSERT_NEAR(bip.norm(), 1.0, 1e-12);
        const double fa = fidelity_pure(reduced_state(bip, {"A"}), psi);
        const double fb = fidelity_pure(reduced_state(bip, {"B"}), psi);
        EXPECT_NEAR(tri.clones[0].mean, fa, 1e-9) << "d=" << d;
        EXPECT_NEAR(tri.clones[1].mean, fb, 1e-9) << "d=" << d;
        // Known closed form of the two-clone machine.
        EXPECT_NEAR(fa, 1.0 - (d - 1.0) / d * c.beta * c.beta, 1e-12);
        EXPECT_NEAR(fb, 1.0 - (d - 1.0) / d * c.alpha * c.alpha, 1e-12);
      }
    }
  }
}

TEST(Fidelities, EqualTwoCloneQubitPoint) {
  const auto c = normalize_coeffs(2, 1.0, kInfiniteRatio);
  EXPECT_NEAR(c.alpha, 1.0 / std::sqrt(3.0), 1e-15);
  const auto f = fidelities_analytic(c);
  EXPECT_NEAR(f[0], 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(f[1], 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(f[2], 5.0 / 9.0, 1e-15);
}

TEST(Fidelities, ExchangeSymmetry) {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto c = random_coeffs(3, rng);
    const auto f = fidelities_analytic(c);
    const auto swapped_bc = fidelities_analytic({3, c.alpha, c.gamma, c.beta});
    EXPECT_NEAR(swapped_bc[0], f[0], 1e-15);
    EXPECT_NEAR(swapped_bc[1], f[2], 1e-15);
    EXPECT_NEAR(swapped_bc[2], f[1], 1e-15);
    const auto cycled = fidelities_analytic({3, c.gamma, c.alpha, c.beta});
    EXPECT_NEAR(cycled[0], f[2], 1e-15);
    EXPECT_NEAR(cycled[1], f[0], 1e-15);
    EXPECT_NEAR(cycled[2], f[1], 1e-15);
  }
}

TEST(Anticlones, DiagnosticProperties) {
  const auto perfect = anticlone_fidelities({2, 1.0, 0.0, 0.0}, 30, 4);
  EXPECT_LT(perfect[0].stddev, 1e-10);
  EXPECT_LT(perfect[1].stddev, 1e-10);
  const auto sym = anticlone_fidelities(normalize_coeffs(2, 1.0, 1.0), 30, 4);
  EXPECT_NEAR(sym[0].mean, sym[1].mean, 1e-12);
  Rng rng(19);
  for (int t = 0; t < 5; ++t) {
    const auto r = anticlone_fidelities(random_coeffs(3, rng), 10, t);
    for (const auto& st : r) {
      EXPECT_GE(st.min, 0.0);
      EXPECT_LE(st.max, 1.0);
    }
  }
}

TEST(OptimalCoeffs, VerticesAndCentroid) {
  for (int d = 2; d <= 4; ++d) {
    const auto a = optimal_coeffs_for_weights(d, {1.0, 0.0, 0.0});
    EXPECT_NEAR(a.alpha, 1.0, 1e-12);
    EXPECT_NEAR(a.beta, 0.0, 1e-12);
    EXPECT_NEAR(a.gamma, 0.0, 1e-12);
    const auto c = optimal_coeffs_for_weights(d, {1.0 / 3, 1.0 / 3, 1.0 / 3});
    EXPECT_NEAR(c.alpha, c.beta, 1e-12);
    EXPECT_NEAR(c.beta, c.gamma, 1e-12);
  }
  const auto f = fidelities_analytic(optimal_coeffs_for_weights(2, {1.0, 1.0, 1.0}));
  for (double x : f) EXPECT_NEAR(x, 7.0 / 9.0, 1e-12);
}

TEST(OptimalCoeffs, BeatsBruteForceSurfaceScan) {
  // Oracle: dense scan of the positive octant of the constraint surface.
  Rng rng(31);
  for (int d : {2, 3}) {
    for (int t = 0; t < 8; ++t) {
      const std::array<double, 3> w{rng.uniform(), rng.uniform(), rng.uniform()};
      auto objective = [&](const TripartiteCoeffs& c) {
        const auto f = fidelities_analytic(c);
        return w[0] * f[0] + w[1] * f[1] + w[2] * f[2];
      };
      double scan_best = -1.0;
      constexpr int kSteps = 120;
      for (int i = 0; i <= kSteps; ++i) {
        for (int j = 0; j <= kSteps; ++j) {
          const double th = 0.5 * std::numbers::pi * i / kSteps;
          const double ph = 0.5 * std::numbers::pi * j / kSteps;
          const double x = std::sin(th) * std::cos(ph), y = std::sin(th) * std::sin(ph), z = std::cos(th);
          scan_best = std::max(scan_best, objective(make_coeffs(d, std::max(0.0, x), std::max(0.0, y), std::max(0.0, z))));
        }
      }
      const double opt = objective(optimal_coeffs_for_weights(d, w));
      EXPECT_GE(opt, scan_best - 1e-12) << "d=" << d;
      EXPECT_LT(opt - scan_best, 1e-3) << "d=" << d;
    }
  }
}

TEST(OptimalCoeffs, RejectsBadWeights) {
  EXPECT_THROW(optimal_coeffs_for_weights(2, {0.0, 0.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(optimal_coeffs_for_weights(2, {1.0, -0.5, 0.5}), std::invalid_argument);
}

TEST(FitCoefficients, RoundTripOnSurface) {
  Rng rng(41);
  for (int d = 2; d <= 4; ++d) {
    for (int t = 0; t < 10; ++t) {
      const auto c = random_coeffs(d, rng);
      const auto fit = fit_coefficients(d, fidelities_analytic(c));
      EXPECT_LT(fit.fidelity_residual, 1e-12);
      EXPECT_LT(std::abs(fit.constraint_residual), 1e-10);
    }
  }
}

TEST(FitCoefficients, OffSurfaceTargetShowsResidual) {
  const auto fit = fit_coefficients(2, {0.6, 0.6, 0.6});
  EXPECT_GT(std::abs(fit.constraint_residual) + fit.fidelity_residual, 1e-3);
}

}  // namespace
}  // namespace clonebench::tripartite
