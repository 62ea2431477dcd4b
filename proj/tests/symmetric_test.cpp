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

#include "clonebench/symmetric.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <numeric>

#include "test_util.hpp"

namespace clonebench {
namespace {

using testing::max_abs_diff;

Matrix kron_power(const Matrix& u, int copies) {
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < copies; ++i) {
    Matrix next(out.rows() * u.rows(), out.cols() * u.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block(r * u.rows(), c * u.cols(), u.rows(), u.cols()) = out(r, c) * u;
      }
    }
    out = std::move(next);
  }
  return out;
}

long rank_of_projector(const Matrix& p) {
  return std::lround(p.trace().real());
}

TEST(SymProjector, SingleQubitIsIdentity) {
  EXPECT_LT(max_abs_diff(sym_projector(1).matrix(), Matrix::Identity(2, 2)), 1e-15);
}

TEST(SymProjector, TwoQubitsAnnihilatesSinglet) {
  auto p = sym_projector(2);
  EXPECT_EQ(rank_of_projector(p.matrix()), 3);
  Vector singlet = Vector::Zero(4);
  singlet(1) = 1.0 / std::sqrt(2.0);
  singlet(2) = -1.0 / std::sqrt(2.0);
  EXPECT_LT((p.matrix() * singlet).norm(), 1e-15);
}

TEST(SymProjector, RankIsNPlusOne) {
  for (int n = 1; n <= 7; ++n) {
    auto p = sym_projector(n);
    EXPECT_EQ(rank_of_projector(p.matrix()), n + 1) << "n=" << n;
    EXPECT_LT(max_abs_diff(p.matrix() * p.matrix(), p.matrix()), 1e-12);
    EXPECT_LT(p.hermiticity_residual(), 1e-15);
  }
}

TEST(SymProjector, RejectsEmpty) {
  EXPECT_THROW(sym_projector(0), std::invalid_argument);
}

TEST(SymProjector, EqualsDickeResolution) {
  // Independent route: sum_k |D(n,k)><D(n,k)|.
  for (int n = 1; n <= 6; ++n) {
    Matrix dicke_sum = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (int k = 0; k <= n; ++k) {
      const auto d = dicke_state(n, k);
      dicke_sum += d.amplitudes() * d.amplitudes().adjoint();
    }
    EXPECT_LT(max_abs_diff(dicke_sum, sym_projector(n).matrix()), 1e-13) << "n=" << n;
  }
}

TEST(SymProjector, InvariantUnderQubitPermutations) {
  const int n = 4;
  auto p = sym_projector(n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const Matrix q = permutation_operator(qubit_layout(n), perm).matrix();
    EXPECT_LT(max_abs_diff(q * p.matrix(), p.matrix()), 1e-13);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(DickeState, KnownStates) {
  auto d21 = dicke_state(2, 1);
  EXPECT_NEAR(std::abs(d21.amplitudes()(1) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(d21.amplitudes()(2) - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_EQ(d21.amplitudes()(0), Complex(0.0));
  EXPECT_EQ(d21.amplitudes()(3), Complex(0.0));

  auto d30 = dicke_state(3, 0);
  EXPECT_EQ(d30.amplitudes()(0), Complex(1.0));
  EXPECT_NEAR(d30.norm(), 1.0, 1e-15);
}

TEST(DickeState, GramMatrixIsIdentity) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int kp = 0; kp <= n; ++kp) {
        const Complex overlap = dicke_state(n, k).amplitudes().dot(dicke_state(n, kp).amplitudes());
        EXPECT_NEAR(std::abs(overlap), k == kp ? 1.0 : 0.0, 1e-14);
      }
    }
  }
}

TEST(DickeState, ExcitationEigenstate) {
  const int n = 5;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix number = Matrix::Zero(dim, dim);
  for (Eigen::Index f = 0; f < dim; ++f) {
    number(f, f) = static_cast<double>(std::popcount(static_cast<unsigned long long>(f)));
  }
  for (int k = 0; k <= n; ++k) {
    const Vector v = dicke_state(n, k).amplitudes();
    EXPECT_LT((number * v - static_cast<double>(k) * v).norm(), 1e-14);
  }
}

TEST(DickeState, RejectsOutOfRange) {
  EXPECT_THROW(dicke_state(3, 4), std::invalid_argument);
  EXPECT_THROW(dicke_state(3, -1), std::invalid_argument);
}

TEST(CGProjectors, RanksForSmallN) {
  auto cg2 = cg_projectors(2);
  EXPECT_EQ(rank_of_projector(cg2.s_plus.matrix()), 4);
  EXPECT_EQ(rank_of_projector(cg2.s_minus.matrix()), 2);
  auto cg3 = cg_projectors(3);
  EXPECT_EQ(rank_of_projector(cg3.s_plus.matrix()), 5);
  EXPECT_EQ(rank_of_projector(cg3.s_minus.matrix()), 3);
}

TEST(CGProjectors, RejectsNBelowTwo) {
  EXPECT_THROW(cg_projectors(1), std::invalid_argument);
  EXPECT_THROW(cg_projectors(0), std::invalid_argument);
}

TEST(CGProjectors, AlgebraicInvariantsForNTwoToSix) {
  for (int n = 2; n <= 6; ++n) {
    auto cg = cg_projectors(n);
    const Matrix& sp = cg.s_plus.matrix();
    const Matrix& sm = cg.s_minus.matrix();
    EXPECT_LT(max_abs_diff(sp * sp, sp), 1e-10) << n;
    EXPECT_LT(max_abs_diff(sm * sm, sm), 1e-10) << n;
    EXPECT_LT((sp * sm).cwiseAbs().maxCoeff(), 1e-10) << n;
    EXPECT_EQ(rank_of_projector(sp), n + 2);
    EXPECT_EQ(rank_of_projector(sm), n);
    EXPECT_EQ(min_eigenvalue(sm) > -1e-10, true);

    // Sum is 1 (x) Sym_n, built here from Dicke states as an independent route.
    Matrix sym_b = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (int k = 0; k <= n; ++k) {
      const auto d = dicke_state(n, k);
      sym_b += d.amplitudes() * d.amplitudes().adjoint();
    }
    Matrix one_sym = Matrix::Zero(sp.rows(), sp.cols());
    one_sym.topLeftCorner(sym_b.rows(), sym_b.cols()) = sym_b;
    one_sym.bottomRightCorner(sym_b.rows(), sym_b.cols()) = sym_b;
    EXPECT_LT(max_abs_diff(sp + sm, one_sym), 1e-12) << n;
  }
}

TEST(CGProjectors, InvariantUnderPermutationsOfBClones) {
  for (int n = 2; n <= 5; ++n) {
    auto cg = cg_projectors(n);
    std::vector<std::size_t> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    int checked = 0;
    do {
      if (perm[0] != 0) continue;
      const Matrix p = permutation_operator(cg.s_plus.layout(), perm).matrix();
      EXPECT_LT(max_abs_diff(p * cg.s_plus.matrix() * p.adjoint(), cg.s_plus.matrix()), 1e-12);
      EXPECT_LT(max_abs_diff(p * cg.s_minus.matrix() * p.adjoint(), cg.s_minus.matrix()), 1e-12);
      ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_GT(checked, 0);
  }
}

TEST(CGProjectors, CommuteWithCollectiveUnitaries) {
  Rng rng(101);
  for (int n = 2; n <= 6; ++n) {
    auto cg = cg_projectors(n);
    const int trials = n == 2 ? 100 : 10;
    for (int t = 0; t < trials; ++t) {
      const Matrix u = kron_power(haar_random_unitary(2, rng), n + 1);
      EXPECT_LT(max_abs_diff(u * cg.s_plus.matrix(), cg.s_plus.matrix() * u), 1e-9);
      EXPECT_LT(max_abs_diff(u * cg.s_minus.matrix(), cg.s_minus.matrix() * u), 1e-9);
    }
  }
}

}  // namespace
}  // namespace clonebench
