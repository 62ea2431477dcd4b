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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

namespace clonebench::tripartite {
namespace {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

constexpr double kFitTolerance = 1e-13;

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("tripartite: dimension must be at least 2");
}

double shrink_weight(int d) {
  return (d - 1.0) / d;
}

// Constraint form: v^T N v = 1.
Mat3 constraint_form(int d) {
  const double t = 1.0 / d;
  Mat3 n;
  n << 1, t, t, t, 1, t, t, t, 1;
  return n;
}

// 1 - F^X = shrink_weight * v^T M_X v; M_X skips clone X's own coefficient.
Mat3 infidelity_form(int d, int clone) {
  const double s = 1.0 / (d + 1.0);
  Mat3 m = Mat3::Zero();
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == clone || j == clone) continue;
      m(i, j) = i == j ? 1.0 : s;
    }
  }
  return m;
}

std::array<double, 3> fidelities_of(int d, const Vec3& v) {
  std::array<double, 3> f{};
  for (int x = 0; x < 3; ++x) f[x] = 1.0 - shrink_weight(d) * v.dot(infidelity_form(d, x) * v);
  return f;
}

Mat3 fidelity_jacobian(int d, const Vec3& v) {
  Mat3 j;
  for (int x = 0; x < 3; ++x) j.row(x) = -2.0 * shrink_weight(d) * (infidelity_form(d, x) * v).transpose();
  return j;
}

double max_residual(const std::array<double, 3>& f, const std::array<double, 3>& target) {
  double r = 0.0;
  for (int x = 0; x < 3; ++x) r = std::max(r, std::abs(f[x] - target[x]));
  return r;
}

// Kronecker delta as a double.
double kd(int i, int j) {
  return i == j ? 1.0 : 0.0;
}

}  // namespace

double constraint_residual(const TripartiteCoeffs& c) {
  const Vec3 v(c.alpha, c.beta, c.gamma);
  return v.dot(constraint_form(c.d) * v) - 1.0;
}

void validate(const TripartiteCoeffs& c) {
  require_dim(c.d);
  if (c.alpha < 0.0 || c.beta < 0.0 || c.gamma < 0.0) {
    throw std::invalid_argument("tripartite: coefficients must be nonnegative");
  }
  if (std::abs(constraint_residual(c)) > 1e-12) {
    throw std::invalid_argument("tripartite: coefficients violate the normalization constraint");
  }
}

TripartiteCoeffs make_coeffs(int d, double alpha, double beta, double gamma) {
  require_dim(d);
  if (alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
    throw std::invalid_argument("make_coeffs: coefficients must be nonnegative");
  }
  if (alpha == 0.0 && beta == 0.0 && gamma == 0.0) {
    throw std::invalid_argument("make_coeffs: all coefficients are zero");
  }
  const double scale = 1.0 / std::sqrt(constraint_residual({d, alpha, beta, gamma}) + 1.0);
  return {d, alpha * scale, beta * scale, gamma * scale};
}

TripartiteCoeffs normalize_coeffs(int d, double r_ab, double r_ac) {
  if (!(r_ab > 0.0) || !(r_ac > 0.0)) {
    throw std::invalid_argument("normalize_coeffs: ratios must be positive (use kInfiniteRatio for a zero coefficient)");
  }
  const double beta = std::isinf(r_ab) ? 0.0 : 1.0 / r_ab;
  const double gamma = std::isinf(r_ac) ? 0.0 : 1.0 / r_ac;
  return make_coeffs(d, 1.0, beta, gamma);
}

StateVector output_state(const TripartiteCoeffs& c, const StateVector& psi) {
  validate(c);
  const int d = c.d;
  if (psi.dim() != d) throw std::invalid_argument("output_state: input dimension does not match d");
  if (std::abs(psi.norm() - 1.0) > tol::kNorm) throw std::invalid_argument("output_state: input is not normalized");

  const double pref = std::sqrt(d / (2.0 * (d + 1.0))) / d;  // C times the two 1/sqrt(d) factors
  const Vector& in = psi.amplitudes();
  Vector out = Vector::Zero(static_cast<Eigen::Index>(std::pow(d, 5)));
  Eigen::Index flat = 0;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      for (int cc = 0; cc < d; ++cc) {
        for (int e = 0; e < d; ++e) {
          for (int f = 0; f < d; ++f, ++flat) {
            const Complex amp = c.alpha * in(a) * (kd(b, e) * kd(cc, f) + kd(b, f) * kd(cc, e)) +
                                c.beta * in(b) * (kd(a, e) * kd(cc, f) + kd(a, f) * kd(cc, e)) +
                                c.gamma * in(cc) * (kd(a, e) * kd(b, f) + kd(a, f) * kd(b, e));
            out(flat) = pref * amp;
          }
        }
      }
    }
  }
  return StateVector(SubsystemLayout::uniform({"A", "B", "C", "E", "F"}, d), std::move(out));
}

std::array<double, 3> fidelities_analytic(const TripartiteCoeffs& c) {
  require_dim(c.d);
  return fidelities_of(c.d, Vec3(c.alpha, c.beta, c.gamma));
}

TripleFidelities fidelities_numeric(const TripartiteCoeffs& c, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("fidelities_numeric: need at least one sample");
  validate(c);
  Rng rng(seed);
  std::array<std::vector<double>, 3> values;
  double norm_dev = 0.0;
  const std::array<std::string, 3> labels{"A", "B", "C"};
  for (int s = 0; s < samples; ++s) {
    const auto psi = haar_random_state(c.d, rng);
    const auto out = output_state(c, psi);
    norm_dev = std::max(norm_dev, std::abs(out.norm() - 1.0));
    for (int x = 0; x < 3; ++x) values[x].push_back(fidelity_pure(reduced_state(out, {labels[x]}), psi));
  }
  TripleFidelities result;
  for (int x = 0; x < 3; ++x) result.clones[x] = summarize(values[x]);
  result.norm_deviation = norm_dev;
  return result;
}

std::array<SampleStats, 2> anticlone_fidelities(const TripartiteCoeffs& c, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("anticlone_fidelities: need at least one sample");
  validate(c);
  Rng rng(seed);
  std::array<std::vector<double>, 2> values;
  for (int s = 0; s < samples; ++s) {
    const auto psi = haar_random_state(c.d, rng);
    const auto out = output_state(c, psi);
    values[0].push_back(fidelity_pure(reduced_state(out, {"E"}), psi));
    values[1].push_back(fidelity_pure(reduced_state(out, {"F"}), psi));
  }
  return {summarize(values[0]), summarize(values[1])};
}

TripartiteCoeffs optimal_coeffs_for_weights(int d, const std::array<double, 3>& weights) {
  require_dim(d);
  for (double w : weights) {
    if (w < 0.0) throw std::invalid_argument("optimal_coeffs_for_weights: weights must be nonnegative");
  }
  if (weights[0] + weights[1] + weights[2] <= 0.0) {
    throw std::invalid_argument("optimal_coeffs_for_weights: weights sum to zero");
  }
  Mat3 m = Mat3::Zero();
  for (int x = 0; x < 3; ++x) m += weights[x] * infidelity_form(d, x);
  const Mat3 n = constraint_form(d);

  double best_value = std::numeric_limits<double>::infinity();
  Vec3 best = Vec3::Zero();
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> support;
    for (int i = 0; i < 3; ++i) {
      if (mask & (1 << i)) support.push_back(i);
    }
    const auto k = static_cast<Eigen::Index>(support.size());
    Eigen::MatrixXd ms(k, k), ns(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        ms(i, j) = m(support[i], support[j]);
        ns(i, j) = n(support[i], support[j]);
      }
    }
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(ms, ns);
    if (solver.info() != Eigen::Success) continue;
    Eigen::VectorXd x = solver.eigenvectors().col(0);  // ascending order
    if (x.sum() < 0.0) x = -x;
    if (x.minCoeff() < -1e-12) continue;
    const double value = solver.eigenvalues()(0);
    if (value < best_value - 1e-14) {
      best_value = value;
      best.setZero();
      for (Eigen::Index i = 0; i < k; ++i) best(support[i]) = std::max(0.0, x(i));
    }
  }
  if (!std::isfinite(best_value)) throw std::runtime_error("optimal_coeffs_for_weights: no feasible face");
  return make_coeffs(d, best(0), best(1), best(2));
}

CoefficientFit fit_coefficients(int d, const std::array<double, 3>& target) {
  require_dim(d);
  const std::array<double, 4> seeds{-0.5, 0.2, 0.6, 1.0};
  CoefficientFit best;
  best.fidelity_residual = std::numeric_limits<double>::infinity();
  for (double s0 : seeds) {
    for (double s1 : seeds) {
      for (double s2 : seeds) {
        Vec3 v(s0, s1, s2);
        double res = max_residual(fidelities_of(d, v), target);
        for (int it = 0; it < 100 && res > 1e-15; ++it) {
          const auto f = fidelities_of(d, v);
          const Vec3 g(f[0] - target[0], f[1] - target[1], f[2] - target[2]);
          const Vec3 step = fidelity_jacobian(d, v).colPivHouseholderQr().solve(g);
          if (!step.allFinite()) break;
          double lambda = 1.0;
          bool moved = false;
          while (lambda > 1e-6) {
            const Vec3 trial = v - lambda * step;
            const double r = max_residual(fidelities_of(d, trial), target);
            if (r < res) {
              v = trial;
              res = r;
              moved = true;
              break;
            }
            lambda *= 0.5;
          }
          if (!moved) break;
        }
        if (v.sum() < 0.0) v = -v;
        const double surface = v.dot(constraint_form(d) * v) - 1.0;
        // Several roots can reproduce the same triple; prefer the converged
        // root closest to the constraint surface.
        const bool converged = res <= kFitTolerance;
        const bool best_converged = best.fidelity_residual <= kFitTolerance;
        const bool better = converged ? (!best_converged || std::abs(surface) < std::abs(best.constraint_residual))
                                      : (!best_converged && res < best.fidelity_residual);
        if (better) {
          best = {v(0), v(1), v(2), res, surface};
        }
      }
    }
  }
  return best;
}

}  // namespace clonebench::tripartite
