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

#include "clonebench/linalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "test_util.hpp"

namespace clonebench {
namespace {

using testing::max_abs_diff;
using testing::random_density;

TEST(SubsystemLayout, TotalDimensionIsProduct) {
  SubsystemLayout layout{{"in", 2}, {"A", 3}, {"B", 5}};
  EXPECT_EQ(layout.total_dim(), 30);
  EXPECT_EQ(layout.index_of("B"), 2u);
  EXPECT_THROW(layout.index_of("C"), std::invalid_argument);
}

TEST(SubsystemLayout, RejectsDuplicateLabels) {
  EXPECT_THROW((SubsystemLayout{{"A", 2}, {"A", 2}}), std::invalid_argument);
  SubsystemLayout a{{"A", 2}};
  EXPECT_THROW(a.concat(a), std::invalid_argument);
}

TEST(Tensor, IdentityTimesIdentity) {
  auto i2a = LabeledOperator::identity(SubsystemLayout{{"A", 2}});
  auto i2b = LabeledOperator::identity(SubsystemLayout{{"B", 2}});
  auto i4 = tensor(i2a, i2b);
  EXPECT_EQ(i4.dim(), 4);
  EXPECT_EQ(max_abs_diff(i4.matrix(), Matrix::Identity(4, 4)), 0.0);
}

TEST(Tensor, BasisStates) {
  auto zero = StateVector::basis(SubsystemLayout{{"A", 2}}, 0);
  auto one = StateVector::basis(SubsystemLayout{{"B", 2}}, 1);
  auto both = tensor(zero, one);
  ASSERT_EQ(both.dim(), 4);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(both.amplitudes()(i), Complex(i == 1 ? 1.0 : 0.0, 0.0));
  }
  EXPECT_EQ(both.layout().labels(), (std::vector<std::string>{"A", "B"}));
}

TEST(Tensor, NormIsMultiplicative) {
  Rng rng(11);
  auto psi = haar_random_state(3, rng, "A");
  auto phi = haar_random_state(4, rng, "B");
  EXPECT_NEAR(tensor(psi, phi).norm(), 1.0, 1e-12);
}

TEST(Tensor, DuplicateLabelThrows) {
  auto a = StateVector::basis(SubsystemLayout{{"A", 2}}, 0);
  EXPECT_THROW(tensor(a, a), std::invalid_argument);
}

TEST(PartialTrace, ProductStateReturnsFactor) {
  Rng rng(3);
  auto rho_a = random_density(SubsystemLayout{{"A", 2}}, rng);
  auto rho_b = random_density(SubsystemLayout{{"B", 3}}, rng);
  auto joint = tensor(rho_a, rho_b);
  EXPECT_LT(max_abs_diff(partial_trace(joint, {"A"}).matrix(), rho_a.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(joint, {"B"}).matrix(), rho_b.matrix()), 1e-14);
}

TEST(PartialTrace, MaximallyEntangledGivesMaximallyMixed) {
  auto phi = max_entangled(3, "A", "B");
  auto rho = DensityOperator::pure(phi);
  auto reduced = partial_trace(rho, {"A"});
  EXPECT_LT(max_abs_diff(reduced.matrix(), Matrix::Identity(3, 3) / 3.0), 1e-15);
  EXPECT_LT(max_abs_diff(reduced_state(phi, {"B"}).matrix(), Matrix::Identity(3, 3) / 3.0), 1e-15);
}

TEST(PartialTrace, MatchesExplicitIndexSum) {
  // Oracle: explicit triple loop for keeping the middle of three subsystems.
  Rng rng(5);
  SubsystemLayout layout{{"X", 2}, {"Y", 3}, {"Z", 2}};
  auto rho = random_density(layout, rng);
  Matrix expected = Matrix::Zero(3, 3);
  for (int y1 = 0; y1 < 3; ++y1) {
    for (int y2 = 0; y2 < 3; ++y2) {
      for (int x = 0; x < 2; ++x) {
        for (int z = 0; z < 2; ++z) {
          expected(y1, y2) += rho.matrix()(x * 6 + y1 * 2 + z, x * 6 + y2 * 2 + z);
        }
      }
    }
  }
  EXPECT_LT(max_abs_diff(partial_trace(rho, {"Y"}).matrix(), expected), 1e-15);
}

TEST(PartialTrace, KeepOrderFollowsLayout) {
  Rng rng(8);
  auto rho_a = random_density(SubsystemLayout{{"A", 2}}, rng);
  auto rho_b = random_density(SubsystemLayout{{"B", 3}}, rng);
  auto rho_c = random_density(SubsystemLayout{{"C", 2}}, rng);
  auto joint = tensor(tensor(rho_a, rho_b), rho_c);
  auto kept = partial_trace(joint, {"C", "A"});
  EXPECT_EQ(kept.layout().labels(), (std::vector<std::string>{"A", "C"}));
  EXPECT_LT(max_abs_diff(kept.matrix(), tensor(rho_a, rho_c).matrix()), 1e-14);
}

TEST(PartialTrace, UnknownLabelThrows) {
  auto rho = DensityOperator::maximally_mixed(SubsystemLayout{{"A", 2}});
  EXPECT_THROW(partial_trace(rho, {"Q"}), std::invalid_argument);
}

TEST(PartialTrace, PreservesTraceAndPositivityOnRandomInputs) {
  Rng rng(17);
  SubsystemLayout layout{{"A", 2}, {"B", 3}, {"C", 2}, {"D", 2}};
  const std::vector<std::vector<std::string>> keeps = {
      {"A"}, {"B"}, {"A", "C"}, {"B", "D"}, {"A", "B", "C"}, {}};
  for (int trial = 0; trial < 25; ++trial) {
    auto rho = random_density(layout, rng);
    for (const auto& keep : keeps) {
      auto reduced = partial_trace(rho, std::span<const std::string>(keep));
      EXPECT_NEAR(reduced.trace(), rho.trace(), 1e-12);
      EXPECT_GE(min_eigenvalue(reduced.matrix()), -1e-12);
      EXPECT_LT(reduced.op().hermiticity_residual(), 1e-13);
    }
  }
}

TEST(PartialTrace, PureStateRouteAgreesWithOperatorRoute) {
  Rng rng(23);
  SubsystemLayout layout{{"A", 2}, {"B", 3}, {"C", 2}};
  Vector v(layout.total_dim());
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = rng.complex_normal();
  auto psi = StateVector::normalized(layout, v);
  auto rho = DensityOperator::pure(psi);
  for (const std::vector<std::string>& keep :
       {std::vector<std::string>{"A"}, {"B", "C"}, {"A", "C"}}) {
    EXPECT_LT(max_abs_diff(reduced_state(psi, keep).matrix(), partial_trace(rho, keep).matrix()),
              1e-14);
  }
}

TEST(Permute, ReordersKroneckerFactors) {
  Rng rng(29);
  auto rho_a = random_density(SubsystemLayout{{"A", 2}}, rng);
  auto rho_b = random_density(SubsystemLayout{{"B", 3}}, rng);
  const std::vector<std::string> order{"B", "A"};
  auto swapped = permute(tensor(rho_a, rho_b).op(), order);
  EXPECT_EQ(swapped.layout().labels(), order);
  EXPECT_LT(max_abs_diff(swapped.matrix(), tensor(rho_b, rho_a).matrix()), 1e-15);

  auto psi = haar_random_state(2, rng, "A");
  auto phi = haar_random_state(3, rng, "B");
  auto swapped_state = permute(tensor(psi, phi), order);
  EXPECT_LT((swapped_state.amplitudes() - tensor(phi, psi).amplitudes()).norm(), 1e-15);
}

TEST(EigHermitian, DiagonalSortedDescending) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(1, 1) = 2.0;
  m(2, 2) = 3.0;
  auto eig = eig_hermitian(m);
  EXPECT_NEAR(eig.values(0), 3.0, 1e-15);
  EXPECT_NEAR(eig.values(1), 2.0, 1e-15);
  EXPECT_NEAR(eig.values(2), 1.0, 1e-15);
}

TEST(EigHermitian, IdentityHasUnitSpectrum) {
  auto eig = eig_hermitian(Matrix::Identity(5, 5));
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(eig.values(i), 1.0, 1e-15);
}

TEST(EigHermitian, RandomHermitianReconstructsWithOrthonormalVectors) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Eigen::Index n = 2 + trial % 15;
    const Matrix h = testing::random_hermitian(n, rng);
    auto eig = eig_hermitian(h);
    const Matrix& v = eig.vectors;
    EXPECT_LT(max_abs_diff(v.adjoint() * v, Matrix::Identity(n, n)), 1e-9);
    const Matrix rebuilt = v * eig.values.cast<Complex>().asDiagonal() * v.adjoint();
    EXPECT_LT(max_abs_diff(rebuilt, h), 1e-9);
    for (Eigen::Index i = 1; i < n; ++i) EXPECT_GE(eig.values(i - 1), eig.values(i));
  }
}

TEST(EigHermitian, RejectsNonHermitian) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(eig_hermitian(m), std::invalid_argument);
}

TEST(Haar, UnitNormAndDeterminism) {
  for (int d = 2; d <= 6; ++d) {
    auto a = haar_random_state(d, 1234);
    auto b = haar_random_state(d, 1234);
    EXPECT_NEAR(a.norm(), 1.0, 1e-12);
    EXPECT_EQ(a.amplitudes(), b.amplitudes());
  }
  EXPECT_NE(haar_random_state(3, 1).amplitudes(), haar_random_state(3, 2).amplitudes());
}

TEST(Haar, RejectsDimensionBelowTwo) {
  EXPECT_THROW(haar_random_state(1, 0), std::invalid_argument);
}

TEST(Haar, RandomStreamIsPortable) {
  // The 10000th draw from seed 5489 is fixed by the C++ standard.
  Rng rng(5489);
  for (int i = 0; i < 9999; ++i) rng.next();
  EXPECT_EQ(rng.next(), 9981545732273789042ULL);
}

// Chi-square over the independent real components of the empirical mean of
// |psi><psi|, each standardized by its sample standard error.
TEST(Haar, MeanProjectorConvergesToMaximallyMixed) {
  constexpr int kSamples = 100000;
  for (int d : {2, 3}) {
    Rng rng(derive_seed(777, d));
    Matrix sum = Matrix::Zero(d, d);
    Eigen::ArrayXXd sq_re = Eigen::ArrayXXd::Zero(d, d);
    Eigen::ArrayXXd sq_im = Eigen::ArrayXXd::Zero(d, d);
    for (int s = 0; s < kSamples; ++s) {
      auto psi = haar_random_state(d, rng);
      const Matrix p = psi.amplitudes() * psi.amplitudes().adjoint();
      sum += p;
      sq_re += p.real().array().square();
      sq_im += p.imag().array().square();
    }
    const Matrix mean = sum / kSamples;
    double chi2 = 0.0;
    int dof = 0;
    for (int i = 0; i < d; ++i) {
      for (int j = i; j < d; ++j) {
        const double target = i == j ? 1.0 / d : 0.0;
        const double var_re = sq_re(i, j) / kSamples - std::pow(mean(i, j).real(), 2);
        const double z_re = (mean(i, j).real() - target) / std::sqrt(var_re / kSamples);
        EXPECT_LT(std::abs(z_re), 4.5) << "d=" << d << " (" << i << "," << j << ")";
        chi2 += z_re * z_re;
        ++dof;
        if (i != j) {
          const double var_im = sq_im(i, j) / kSamples - std::pow(mean(i, j).imag(), 2);
          const double z_im = mean(i, j).imag() / std::sqrt(var_im / kSamples);
          chi2 += z_im * z_im;
          ++dof;
        }
      }
    }
    EXPECT_LT(chi2, dof + 3.0 * std::sqrt(2.0 * dof)) << "d=" << d;
  }
}

TEST(HaarUnitary, IsUnitary) {
  Rng rng(9);
  for (int d = 2; d <= 5; ++d) {
    const Matrix u = haar_random_unitary(d, rng);
    EXPECT_LT(max_abs_diff(u.adjoint() * u, Matrix::Identity(d, d)), 1e-13);
  }
}

TEST(Fidelity, PureAndMixedLimits) {
  Rng rng(41);
  for (int d = 2; d <= 5; ++d) {
    auto psi = haar_random_state(d, rng);
    EXPECT_NEAR(fidelity_pure(DensityOperator::pure(psi), psi), 1.0, 1e-14);
    EXPECT_NEAR(fidelity_pure(DensityOperator::maximally_mixed(psi.layout()), psi), 1.0 / d, 1e-14);
  }
}

TEST(Fidelity, ShrinkingFactorForm) {
  Rng rng(43);
  for (int d = 2; d <= 4; ++d) {
    auto psi = haar_random_state(d, rng);
    for (double eta : {0.0, 0.25, 2.0 / 3.0, 1.0}) {
      const double f = fidelity_pure(DensityOperator::shrunk(psi, eta), psi);
      EXPECT_NEAR(f, eta + (1.0 - eta) / d, 1e-14);
      EXPECT_NEAR(fidelity_to_eta(f, d), eta, 1e-13);
    }
  }
}

TEST(Fidelity, DimensionMismatchThrows) {
  auto psi = haar_random_state(3, 1);
  auto rho = DensityOperator::maximally_mixed(SubsystemLayout{{"A", 2}});
  EXPECT_THROW(fidelity_pure(rho, psi), std::invalid_argument);
}

TEST(FidelityToEta, KnownValues) {
  EXPECT_DOUBLE_EQ(fidelity_to_eta(1.0, 2), 1.0);
  EXPECT_DOUBLE_EQ(fidelity_to_eta(0.5, 2), 0.0);
  EXPECT_NEAR(fidelity_to_eta(5.0 / 6.0, 2), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(fidelity_to_eta(0.0, 3), -0.5, 1e-15);
  EXPECT_THROW(fidelity_to_eta(-0.1, 2), std::invalid_argument);
  EXPECT_THROW(fidelity_to_eta(1.1, 3), std::invalid_argument);
}

TEST(DensityOperator, ValidatesInvariants) {
  SubsystemLayout layout{{"A", 2}};
  Matrix not_hermitian = Matrix::Identity(2, 2) / 2.0;
  not_hermitian(0, 1) = 0.3;
  EXPECT_THROW(DensityOperator(layout, not_hermitian), std::invalid_argument);
  EXPECT_THROW(DensityOperator(layout, Matrix::Identity(2, 2)), std::invalid_argument);
  Matrix negative = Matrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(DensityOperator(layout, negative), std::invalid_argument);
}

}  // namespace
}  // namespace clonebench
