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

#ifndef CLONEBENCH_ASYM_1N_HPP
#define CLONEBENCH_ASYM_1N_HPP

#include <cstdint>
#include <vector>

#include "clonebench/linalg.hpp"
#include "clonebench/symmetric.hpp"

/// Asymmetric 1 -> 1+n qubit cloning: one clone A and n symmetric clones
/// B1 .. Bn, produced by sandwiching rho (x) 1 between
/// alpha S_{n+1} + beta S_{n-1}.
namespace clonebench::asym1n {

/// Frontier coordinate: y in [0, 1], x = sqrt(1 - y^2).
struct TradeoffParam {
  double y = 0.0;
  double x = 1.0;

  /// Throws std::invalid_argument for y outside [0, 1].
  static TradeoffParam from_y(double y);
};

struct FidelityPair {
  double a = 0.0;  // clone A
  double b = 0.0;  // any one of the B clones
};

class SandwichCloner {
 public:
  int n() const { return n_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  /// Scalar making rho -> norm_const * K (rho (x) 1) K^dagger trace preserving.
  double norm_const() const { return norm_const_; }
  /// K = alpha S_{n+1} + beta S_{n-1} on layout A, B1 .. Bn.
  const LabeledOperator& kraus() const { return kraus_; }
  const SubsystemLayout& output_layout() const { return kraus_.layout(); }

  DensityOperator apply(const DensityOperator& input) const;
  DensityOperator apply(const StateVector& psi) const;

  /// Single-clone fidelities of every output qubit (A first) for input psi.
  std::vector<double> clone_fidelities(const StateVector& psi) const;

 private:
  friend SandwichCloner build_sandwich(const CGProjectors& cg, double alpha, double beta);

  SandwichCloner(int n, double alpha, double beta, double norm_const, LabeledOperator kraus)
      : n_(n), alpha_(alpha), beta_(beta), norm_const_(norm_const), kraus_(std::move(kraus)) {}

  int n_;
  double alpha_;
  double beta_;
  double norm_const_;
  LabeledOperator kraus_;
};

/// Builds the map and checks on 200 Haar inputs that the normalization is
/// input independent. Throws std::invalid_argument for n < 2 or
/// (alpha, beta) = (0, 0).
SandwichCloner build_sandwich(int n, double alpha, double beta);
SandwichCloner build_sandwich(const CGProjectors& cg, double alpha, double beta);

struct SandwichFidelities {
  SampleStats a;
  SampleStats b;  // clone B1
  double b_spread = 0.0;  // max over inputs of (max - min) across B clones
  int samples = 0;
};

/// Fidelities over `samples` Haar-random inputs.
SandwichFidelities numeric_fidelities(const SandwichCloner& cloner, int samples, std::uint64_t seed);

/// F^A = 1 - 2y^2/3, F^B = 1/2 + (y^2 + sqrt(n(n+2)) x y) / (3n). Requires n >= 2.
FidelityPair analytic_tradeoff(int n, TradeoffParam p);

/// y at which F^B of analytic_tradeoff peaks, i.e. the optimal symmetric
/// 1 -> n point F^B = (2n+1)/(3n). The optimal frontier is y in [0, y*].
double symmetric_optimum_y(int n);

struct SandwichCoefficients {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Coefficients (alpha, beta) whose sandwich map reproduces analytic_tradeoff(n, p).
///
/// The map is evaluated numerically along the trace-normalized circle
/// alpha^2 (n+2)/2 + beta^2 n/2 = 1 and the frontier angle 2 asin(y) is read
/// back from its fidelities; a bracketing root find matches it to p. beta
/// turns negative for y > y(beta = 0). Throws std::runtime_error if the match
/// misses analytic_tradeoff by more than 1e-8.
SandwichCoefficients param_bridge(int n, TradeoffParam p);
SandwichCoefficients param_bridge(const CGProjectors& cg, TradeoffParam p);

/// n -> infinity limit: F^A = 1 - 2y^2/3, F_meas = 1/2 + y sqrt(1 - y^2)/3,
/// for 0 <= y <= 1/sqrt(2).
FidelityPair estimation_limit(double y);

/// Max-norm distance from f to the analytic_tradeoff(n, .) curve over y in
/// [0, 1], evaluated at the curve points matching F^A or F^B. Stays accurate
/// at y = 0, where inverting F^A alone loses half the digits.
double frontier_residual(int n, FidelityPair f);

}  // namespace clonebench::asym1n

#endif  // CLONEBENCH_ASYM_1N_HPP
