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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/tools/toms748_solve.hpp>

namespace clonebench::asym1n {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kNormSamples = 200;

void require_n(int n, const char* where) {
  if (n < 2) {
    throw std::invalid_argument(std::string(where) +
                                ": n must be at least 2; for 1 -> 1+1 use the tripartite cloner with gamma = 0");
  }
}

// Tr[K^dagger K (|psi><psi| (x) 1)] = <psi| Tr_B[K^dagger K] |psi>.
Matrix input_gram(const Matrix& kraus, Eigen::Index clone_dim) {
  const Matrix kk = kraus.adjoint() * kraus;
  Matrix g = Matrix::Zero(2, 2);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      g(i, j) = kk.block(i * clone_dim, j * clone_dim, clone_dim, clone_dim).trace();
    }
  }
  return g;
}

// K (psi (x) 1): maps the n-qubit ancilla space into the output space.
Matrix embed_input(const Matrix& kraus, const Vector& psi, Eigen::Index clone_dim) {
  return kraus.leftCols(clone_dim) * psi(0) + kraus.rightCols(clone_dim) * psi(1);
}

double wrap_angle(double a) {
  return std::remainder(a, 2.0 * kPi);
}

// Frontier angle 2 phi read back from a fidelity pair on the optimal family.
double frontier_angle(int n, FidelityPair f) {
  const double y2 = 1.5 * (1.0 - f.a);
  const double two_xy = 2.0 * (3.0 * n * (f.b - 0.5) - y2) / std::sqrt(static_cast<double>(n) * (n + 2));
  return std::atan2(two_xy, 1.0 - 2.0 * y2);
}

SandwichCoefficients on_circle(int n, double theta) {
  return {std::cos(theta) * std::sqrt(2.0 / (n + 2)), std::sin(theta) * std::sqrt(2.0 / n)};
}

FidelityPair evaluate_at_basis(const CGProjectors& cg, SandwichCoefficients c) {
  const auto cloner = build_sandwich(cg, c.alpha, c.beta);
  const auto f = cloner.clone_fidelities(StateVector::basis(SubsystemLayout{{"psi", 2}}, 0));
  return {f[0], f[1]};
}

}  // namespace

TradeoffParam TradeoffParam::from_y(double y) {
  if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("TradeoffParam: y must lie in [0, 1]");
  return {y, std::sqrt(std::max(0.0, 1.0 - y * y))};
}

DensityOperator SandwichCloner::apply(const DensityOperator& input) const {
  if (input.dim() != 2) throw std::invalid_argument("SandwichCloner::apply: input must be a qubit");
  const Eigen::Index clone_dim = kraus_.dim() / 2;
  Matrix extended = Matrix::Zero(kraus_.dim(), kraus_.dim());
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      extended.block(i * clone_dim, j * clone_dim, clone_dim, clone_dim).diagonal().setConstant(input.matrix()(i, j));
    }
  }
  Matrix out = norm_const_ * kraus_.matrix() * extended * kraus_.matrix().adjoint();
  return DensityOperator::trusted(output_layout(), std::move(out));
}

DensityOperator SandwichCloner::apply(const StateVector& psi) const {
  if (psi.dim() != 2) throw std::invalid_argument("SandwichCloner::apply: input must be a qubit");
  const Matrix w = embed_input(kraus_.matrix(), psi.amplitudes(), kraus_.dim() / 2);
  return DensityOperator::trusted(output_layout(), norm_const_ * w * w.adjoint());
}

std::vector<double> SandwichCloner::clone_fidelities(const StateVector& psi) const {
  const auto out = apply(psi);
  std::vector<double> f;
  f.reserve(output_layout().size());
  for (const auto& sub : output_layout()) {
    f.push_back(fidelity_pure(partial_trace(out, {sub.label}), psi));
  }
  return f;
}

SandwichCloner build_sandwich(int n, double alpha, double beta) {
  require_n(n, "build_sandwich");
  return build_sandwich(cg_projectors(n), alpha, beta);
}

SandwichCloner build_sandwich(const CGProjectors& cg, double alpha, double beta) {
  require_n(cg.n, "build_sandwich");
  if (alpha == 0.0 && beta == 0.0) throw std::invalid_argument("build_sandwich: alpha and beta both vanish");
  LabeledOperator kraus(cg.s_plus.layout(), alpha * cg.s_plus.matrix() + beta * cg.s_minus.matrix());

  const Eigen::Index clone_dim = kraus.dim() / 2;
  const Matrix gram = input_gram(kraus.matrix(), clone_dim);
  const double reference = gram(0, 0).real();
  if (reference <= 0.0) throw std::invalid_argument("build_sandwich: map annihilates the input");

  Rng rng(derive_seed(0x5a4d'0001ULL, static_cast<std::uint64_t>(cg.n)));
  for (int s = 0; s < kNormSamples; ++s) {
    const Vector psi = haar_random_state(2, rng).amplitudes();
    const double t = psi.dot(gram * psi).real();
    if (std::abs(t - reference) > 1e-9 * reference) {
      throw std::runtime_error("build_sandwich: normalization depends on the input state");
    }
  }
  return SandwichCloner(cg.n, alpha, beta, 1.0 / reference, std::move(kraus));
}

SandwichFidelities numeric_fidelities(const SandwichCloner& cloner, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("numeric_fidelities: need at least one sample");
  Rng rng(seed);
  std::vector<double> fa, fb;
  fa.reserve(samples);
  fb.reserve(samples);
  double spread = 0.0;
  for (int s = 0; s < samples; ++s) {
    const auto psi = haar_random_state(2, rng);
    const auto f = cloner.clone_fidelities(psi);
    fa.push_back(f[0]);
    fb.push_back(f[1]);
    const auto [lo, hi] = std::minmax_element(f.begin() + 1, f.end());
    spread = std::max(spread, *hi - *lo);
  }
  return {summarize(fa), summarize(fb), spread, samples};
}

FidelityPair analytic_tradeoff(int n, TradeoffParam p) {
  require_n(n, "analytic_tradeoff");
  if (!(p.y >= 0.0 && p.y <= 1.0) || p.x < 0.0 || std::abs(p.x * p.x + p.y * p.y - 1.0) > 1e-12) {
    throw std::invalid_argument("analytic_tradeoff: need y in [0, 1] and x = sqrt(1 - y^2)");
  }
  const double root = std::sqrt(static_cast<double>(n) * (n + 2));
  return {1.0 - 2.0 * p.y * p.y / 3.0, 0.5 + (p.y * p.y + root * p.x * p.y) / (3.0 * n)};
}

double symmetric_optimum_y(int n) {
  require_n(n, "symmetric_optimum_y");
  return std::sin(0.5 * (kPi - std::atan(std::sqrt(static_cast<double>(n) * (n + 2)))));
}

SandwichCoefficients param_bridge(int n, TradeoffParam p) {
  require_n(n, "param_bridge");
  return param_bridge(cg_projectors(n), p);
}

SandwichCoefficients param_bridge(const CGProjectors& cg, TradeoffParam p) {
  const int n = cg.n;
  const FidelityPair target = analytic_tradeoff(n, p);
  const double target_angle = 2.0 * std::asin(p.y);

  auto mismatch = [&](double theta) {
    return wrap_angle(frontier_angle(n, evaluate_at_basis(cg, on_circle(n, theta))) - target_angle);
  };

  // One period of theta covers every frontier angle exactly once. Bracket the
  // root by a coarse scan, skipping the 2 pi wrap discontinuity.
  constexpr int kScan = 72;
  const double lo = -0.5 * kPi;
  const double step = kPi / kScan;
  double a = lo;
  double fa = mismatch(a);
  for (int i = 1; i <= kScan; ++i) {
    const double b = lo + step * i;
    const double fb = mismatch(b);
    if ((fa <= 0.0 && fb >= 0.0) || (fa >= 0.0 && fb <= 0.0)) {
      if (std::abs(fa) < 0.5 * kPi && std::abs(fb) < 0.5 * kPi) {
        double theta = fa == 0.0 ? a : b;
        if (fa != 0.0 && fb != 0.0) {
          std::uintmax_t iters = 200;
          const auto r = boost::math::tools::toms748_solve(mismatch, a, b, fa, fb,
                                                           boost::math::tools::eps_tolerance<double>(50), iters);
          theta = 0.5 * (r.first + r.second);
        }
        const SandwichCoefficients c = on_circle(n, theta);
        const FidelityPair got = evaluate_at_basis(cg, c);
        if (std::abs(got.a - target.a) > 1e-8 || std::abs(got.b - target.b) > 1e-8) {
          throw std::runtime_error("param_bridge: no coefficients reproduce the requested point within 1e-8");
        }
        return c;
      }
    }
    a = b;
    fa = fb;
  }
  throw std::runtime_error("param_bridge: root not bracketed");
}

FidelityPair estimation_limit(double y) {
  if (!(y >= 0.0 && y <= std::sqrt(0.5) + 1e-15)) {
    throw std::invalid_argument("estimation_limit: y must lie in [0, 1/sqrt(2)]");
  }
  return {1.0 - 2.0 * y * y / 3.0, 0.5 + y * std::sqrt(std::max(0.0, 1.0 - y * y)) / 3.0};
}

double frontier_residual(int n, FidelityPair f) {
  if (n < 2) throw std::invalid_argument("frontier_residual: n must be >= 2");
  std::vector<double> candidates;
  // From F^A: y^2 = 3 (1 - F^A) / 2.
  candidates.push_back(std::sqrt(std::clamp(1.5 * (1.0 - f.a), 0.0, 1.0)));
  // From F^B with y = sin(phi): 3n (F^B - 1/2) - 1/2 = R sin(2 phi - delta).
  const double c = std::sqrt(static_cast<double>(n) * (n + 2));
  const double r = 0.5 * std::sqrt(c * c + 1.0);
  const double delta = std::atan2(1.0, c);
  const double s = std::asin(std::clamp((3.0 * n * (f.b - 0.5) - 0.5) / r, -1.0, 1.0));
  for (double two_phi : {delta + s, delta + std::numbers::pi - s}) {
    candidates.push_back(std::sin(std::clamp(0.5 * two_phi, 0.0, 0.5 * std::numbers::pi)));
  }
  double best = std::numeric_limits<double>::infinity();
  for (double y : candidates) {
    const auto g = analytic_tradeoff(n, TradeoffParam::from_y(std::clamp(y, 0.0, 1.0)));
    best = std::min(best, std::max(std::abs(g.a - f.a), std::abs(g.b - f.b)));
  }
  return best;
}

}  // namespace clonebench::asym1n
