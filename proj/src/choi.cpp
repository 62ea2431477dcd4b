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

#include "clonebench/choi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace clonebench::choi {
namespace {

constexpr double kDegeneracy = 1e-9;

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("choi: dimension must be at least 2");
}

SubsystemLayout clone_layout(int d) {
  return SubsystemLayout::uniform({kInputLabel, "A", "B", "C"}, d);
}

// Tr_out of an operator on in (x) out, with `in` the leading factor.
Matrix trace_outputs(const Matrix& s, int d) {
  const Eigen::Index out_dim = s.rows() / d;
  Matrix t(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) t(i, j) = s.block(i * out_dim, j * out_dim, out_dim, out_dim).trace();
  }
  return t;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace

ScoreWeights ScoreWeights::make(double a, double b, double c) {
  if (a < 0.0 || b < 0.0 || c < 0.0) throw std::invalid_argument("ScoreWeights: weights must be nonnegative");
  if (std::abs(a + b + c - 1.0) > 1e-12) throw std::invalid_argument("ScoreWeights: weights must sum to 1");
  return {a, b, c};
}

ChoiOperator::ChoiOperator(LabeledOperator op) : op_(std::move(op)) {
  if (op_.layout().size() < 2 || op_.layout()[0].label != kInputLabel) {
    throw std::invalid_argument("ChoiOperator: layout must start with \"in\" followed by at least one output");
  }
}

ChoiOperator ChoiOperator::identity_channel(int d, const std::string& out) {
  require_dim(d);
  const auto phi = max_entangled(d, kInputLabel, out);
  return ChoiOperator(LabeledOperator(phi.layout(), static_cast<double>(d) * phi.amplitudes() * phi.amplitudes().adjoint()));
}

SubsystemLayout ChoiOperator::output_layout() const {
  std::vector<Subsystem> outs(op_.layout().begin() + 1, op_.layout().end());
  return SubsystemLayout(std::move(outs));
}

LabeledOperator haar_pair_operator(int d) {
  require_dim(d);
  const auto phi = max_entangled(d, kInputLabel, "out");
  const Matrix k = (Matrix::Identity(d * d, d * d) + static_cast<double>(d) * phi.amplitudes() * phi.amplitudes().adjoint()) /
                   (static_cast<double>(d) * (d + 1));
  return LabeledOperator(phi.layout(), k);
}

ScoreOperator clone_score(int d, std::string_view clone) {
  require_dim(d);
  if (std::find(kCloneLabels.begin(), kCloneLabels.end(), clone) == kCloneLabels.end()) {
    throw std::invalid_argument("clone_score: clone must be A, B or C");
  }
  const LabeledOperator pair(SubsystemLayout{{kInputLabel, d}, {std::string(clone), d}}, haar_pair_operator(d).matrix());
  std::vector<std::string> rest;
  for (const auto& label : kCloneLabels) {
    if (label != clone) rest.push_back(label);
  }
  const auto embedded = tensor(pair, LabeledOperator::identity(SubsystemLayout::uniform(rest, d)));
  const auto order = clone_layout(d).labels();
  return {permute(embedded, order), std::string(clone)};
}

ScoreOperator build_score(int d, const ScoreWeights& w) {
  const auto weights = w.as_array();
  Matrix l = Matrix::Zero(Eigen::Index{d} * d * d * d, Eigen::Index{d} * d * d * d);
  for (int x = 0; x < 3; ++x) {
    if (weights[x] != 0.0) l += weights[x] * clone_score(d, kCloneLabels[x]).op.matrix();
  }
  const std::string label = std::to_string(w.a) + "*A+" + std::to_string(w.b) + "*B+" + std::to_string(w.c) + "*C";
  return {LabeledOperator(clone_layout(d), std::move(l)), label};
}

ChoiOperator trace_preserving_on_span(const SubsystemLayout& layout, const Matrix& span) {
  const int d = layout[0].dim;
  const Eigen::Index k = span.cols();
  if (k == 0 || span.rows() != layout.total_dim()) {
    throw std::invalid_argument("trace_preserving_on_span: span does not match the layout");
  }
  const Matrix iso = (static_cast<double>(d) / k) * span * span.adjoint();
  if (max_abs(trace_outputs(iso, d) - Matrix::Identity(d, d)) <= 1e-10) {
    return ChoiOperator(LabeledOperator(layout, iso));
  }

  // S = V X V^dagger with X Hermitian; Tr_out S = 1 is linear in the k^2 real
  // parameters of X. Take the least-squares solution closest to the isotropic X.
  const Eigen::Index out_dim = span.rows() / d;
  std::vector<Matrix> gram(static_cast<std::size_t>(d) * d);  // V_s^dagger V_r for block (r, s)
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) {
      gram[r * d + s] = span.middleRows(s * out_dim, out_dim).adjoint() * span.middleRows(r * out_dim, out_dim);
    }
  }
  std::vector<Matrix> basis;
  basis.reserve(k * k);
  for (Eigen::Index i = 0; i < k; ++i) {
    Matrix e = Matrix::Zero(k, k);
    e(i, i) = 1.0;
    basis.push_back(e);
  }
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      Matrix re = Matrix::Zero(k, k), im = Matrix::Zero(k, k);
      re(i, j) = re(j, i) = 1.0;
      im(i, j) = Complex(0.0, 1.0);
      im(j, i) = Complex(0.0, -1.0);
      basis.push_back(re);
      basis.push_back(im);
    }
  }
  const auto params = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd a(2 * d * d, params);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(2 * d * d);
  for (int r = 0; r < d; ++r) {
    for (int s = 0; s < d; ++s) {
      const Eigen::Index row = 2 * (r * d + s);
      for (Eigen::Index p = 0; p < params; ++p) {
        const Complex t = (basis[p] * gram[r * d + s]).trace();
        a(row, p) = t.real();
        a(row + 1, p) = t.imag();
      }
      b(row) = r == s ? 1.0 : 0.0;
    }
  }
  Eigen::VectorXd x0 = Eigen::VectorXd::Zero(params);
  x0.head(k).setConstant(static_cast<double>(d) / k);
  const Eigen::VectorXd x = x0 + a.completeOrthogonalDecomposition().solve(b - a * x0);
  if ((a * x - b).cwiseAbs().maxCoeff() > 1e-9) {
    throw std::runtime_error("trace_preserving_on_span: no trace-preserving operator on the eigenspace");
  }
  Matrix xm = Matrix::Zero(k, k);
  for (Eigen::Index p = 0; p < params; ++p) xm += x(p) * basis[p];
  if (min_eigenvalue(xm) < -1e-10) {
    throw std::runtime_error("trace_preserving_on_span: trace-preserving correction is not positive");
  }
  return ChoiOperator(LabeledOperator(layout, span * xm * span.adjoint()));
}

ScoreMaximum maximize_score(const ScoreOperator& score) {
  const auto& layout = score.op.layout();
  if (layout.size() < 2 || layout[0].label != kInputLabel) {
    throw std::invalid_argument("maximize_score: score must act on in (x) outputs");
  }
  const int d = layout[0].dim;
  const auto eig = eig_hermitian(score.op.matrix());
  const double top = eig.values(0);
  if (top <= 0.0) throw std::invalid_argument("maximize_score: score has no positive eigenvalue");
  int k = 0;
  while (k < eig.values.size() && eig.values(k) >= top - kDegeneracy * top) ++k;
  auto s = trace_preserving_on_span(layout, eig.vectors.leftCols(k));
  const double achieved = (s.matrix() * score.op.matrix()).trace().real();
  return {std::move(s), d * top, achieved, k};
}

double choi_fidelity(const ChoiOperator& s, std::string_view clone) {
  const auto score = clone_score(s.input_dim(), clone);
  if (!(score.op.layout() == s.layout())) throw std::invalid_argument("choi_fidelity: layout must be in, A, B, C");
  return (s.matrix() * score.op.matrix()).trace().real();
}

OptimalCloner optimal_cloner(int d, const ScoreWeights& w) {
  require_dim(d);
  auto best = maximize_score(build_score(d, w));
  OptimalCloner out{std::move(best.choi), best.bound, best.achieved, best.degeneracy, {}};
  for (int x = 0; x < 3; ++x) out.fidelities[x] = choi_fidelity(out.choi, kCloneLabels[x]);
  return out;
}

DensityOperator apply_choi(const ChoiOperator& s, const DensityOperator& rho) {
  const int d = s.input_dim();
  if (rho.dim() != d) throw std::invalid_argument("apply_choi: input dimension mismatch");
  const Eigen::Index out_dim = s.matrix().rows() / d;
  Matrix out = Matrix::Zero(out_dim, out_dim);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) out += rho.matrix()(i, j) * s.matrix().block(i * out_dim, j * out_dim, out_dim, out_dim);
  }
  return DensityOperator(s.output_layout(), std::move(out));
}

bool ChoiReport::ok(double tolerance) const {
  return psd_residual <= tolerance && tp_residual <= tolerance && trace_residual <= tolerance &&
         hermiticity_residual <= tolerance;
}

ChoiReport verify_choi(const ChoiOperator& s) {
  ChoiReport r;
  const Matrix& m = s.matrix();
  const int d = s.input_dim();
  r.hermiticity_residual = s.op().hermiticity_residual();
  const Matrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(herm, Eigen::EigenvaluesOnly);
  r.psd_residual = std::max(0.0, -solver.eigenvalues().minCoeff());
  r.tp_residual = max_abs(trace_outputs(m, d) - Matrix::Identity(d, d));
  r.trace_residual = std::abs(m.trace() - Complex(d));
  return r;
}

}  // namespace clonebench::choi
