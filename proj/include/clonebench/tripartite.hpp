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

#ifndef CLONEBENCH_TRIPARTITE_HPP
#define CLONEBENCH_TRIPARTITE_HPP

#include <array>
#include <cstdint>
#include <limits>

#include "clonebench/linalg.hpp"

namespace clonebench::tripartite {

/// Coefficients of the 1 -> 1+1+1 qudit cloner. Valid triples are
/// nonnegative and satisfy
///   alpha^2 + beta^2 + gamma^2 + (2/d)(alpha beta + alpha gamma + beta gamma) = 1.
struct TripartiteCoeffs {
  int d = 2;
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Left-hand side of the constraint minus one.
double constraint_residual(const TripartiteCoeffs& c);

/// Throws std::invalid_argument unless d >= 2, all coefficients are
/// nonnegative and the constraint holds within 1e-12.
void validate(const TripartiteCoeffs& c);

/// Scales a nonnegative direction (alpha, beta, gamma) onto the constraint
/// surface. Throws std::invalid_argument if all three vanish or any is negative.
TripartiteCoeffs make_coeffs(int d, double alpha, double beta, double gamma);

/// Marks a vanishing denominator in normalize_coeffs.
inline constexpr double kInfiniteRatio = std::numeric_limits<double>::infinity();

/// Coefficients from ratios alpha/beta and alpha/gamma. A ratio of
/// kInfiniteRatio sets that coefficient to zero. Ratios must be positive.
TripartiteCoeffs normalize_coeffs(int d, double r_ab, double r_ac);

/// Output on A, B, C, E, F (each of dimension d). Throws on a dimension
/// mismatch or an unnormalized input.
StateVector output_state(const TripartiteCoeffs& c, const StateVector& psi);

/// Closed-form single-clone fidelities (F^A, F^B, F^C).
std::array<double, 3> fidelities_analytic(const TripartiteCoeffs& c);

struct TripleFidelities {
  std::array<SampleStats, 3> clones;  // A, B, C
  /// Largest |norm - 1| of the output over the sampled inputs.
  double norm_deviation = 0.0;
};

/// Partial-trace fidelities of A, B, C over `samples` Haar inputs.
TripleFidelities fidelities_numeric(const TripartiteCoeffs& c, int samples, std::uint64_t seed);

/// Diagnostic fidelities of the ancillas E and F with respect to the input.
std::array<SampleStats, 2> anticlone_fidelities(const TripartiteCoeffs& c, int samples, std::uint64_t seed);

/// Coefficients maximizing a F^A + b F^B + c F^C over the constraint surface
/// (nonnegative weights, not all zero).
///
/// On the surface each fidelity is a ratio of quadratic forms in
/// v = (alpha, beta, gamma), so the maximum is the lowest generalized
/// eigenvector of (sum_X w_X M_X, N) restricted to the face of the positive
/// orthant that supports it. Every face is tried and the best feasible one
/// kept.
TripartiteCoeffs optimal_coeffs_for_weights(int d, const std::array<double, 3>& weights);

struct CoefficientFit {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  /// Largest |F^X(fit) - target^X|.
  double fidelity_residual = 0.0;
  /// Constraint residual of the fitted triple.
  double constraint_residual = 0.0;
};

/// Signed (alpha, beta, gamma) whose closed-form fidelities reproduce a target
/// triple, by damped Newton from several starts. The constraint is not
/// imposed, so its residual measures whether the target lies on the family.
CoefficientFit fit_coefficients(int d, const std::array<double, 3>& target);

}  // namespace clonebench::tripartite

#endif  // CLONEBENCH_TRIPARTITE_HPP
