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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>

namespace clonebench {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

std::vector<Eigen::Index> strides_of(const std::vector<int>& dims) {
  std::vector<Eigen::Index> strides(dims.size(), 1);
  for (std::size_t i = dims.size(); i-- > 1;) {
    strides[i - 1] = strides[i] * dims[i];
  }
  return strides;
}

// For every flat index, its flat index within the kept and the traced
// sub-layouts (both in layout order).
struct SplitIndex {
  std::vector<Eigen::Index> kept;
  std::vector<Eigen::Index> traced;
  Eigen::Index kept_dim = 1;
  Eigen::Index traced_dim = 1;
};

SplitIndex split_index(const SubsystemLayout& layout, const std::vector<bool>& keep_mask) {
  const auto dims = layout.dims();
  SplitIndex split;
  std::vector<Eigen::Index> kept_stride(dims.size(), 0);
  std::vector<Eigen::Index> traced_stride(dims.size(), 0);
  for (std::size_t i = dims.size(); i-- > 0;) {
    if (keep_mask[i]) {
      kept_stride[i] = split.kept_dim;
      split.kept_dim *= dims[i];
    } else {
      traced_stride[i] = split.traced_dim;
      split.traced_dim *= dims[i];
    }
  }
  const Eigen::Index total = layout.total_dim();
  split.kept.resize(total);
  split.traced.resize(total);
  std::vector<int> digits(dims.size(), 0);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    Eigen::Index k = 0;
    Eigen::Index t = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) {
      if (keep_mask[i]) {
        k += digits[i] * kept_stride[i];
      } else {
        t += digits[i] * traced_stride[i];
      }
    }
    split.kept[flat] = k;
    split.traced[flat] = t;
    for (std::size_t i = dims.size(); i-- > 0;) {
      if (++digits[i] < dims[i]) break;
      digits[i] = 0;
    }
  }
  return split;
}

std::vector<bool> keep_mask_for(const SubsystemLayout& layout, std::span<const std::string> keep) {
  std::vector<bool> mask(layout.size(), false);
  for (const auto& label : keep) {
    mask[layout.index_of(label)] = true;
  }
  return mask;
}

SubsystemLayout kept_layout(const SubsystemLayout& layout, const std::vector<bool>& mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) idx.push_back(i);
  }
  return layout.select(idx);
}

std::vector<std::size_t> order_indices(const SubsystemLayout& layout, std::span<const std::string> order) {
  if (order.size() != layout.size()) {
    throw std::invalid_argument("permute: order must list every subsystem exactly once");
  }
  std::vector<std::size_t> idx;
  std::set<std::size_t> seen;
  for (const auto& label : order) {
    const auto i = layout.index_of(label);
    if (!seen.insert(i).second) {
      throw std::invalid_argument("permute: repeated label '" + label + "'");
    }
    idx.push_back(i);
  }
  return idx;
}

}  // namespace

// ---------------------------------------------------------------------------
// SubsystemLayout

SubsystemLayout::SubsystemLayout(std::initializer_list<Subsystem> subsystems)
    : subsystems_(subsystems) {
  validate();
}

SubsystemLayout::SubsystemLayout(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
  validate();
}

SubsystemLayout SubsystemLayout::uniform(std::span<const std::string> labels, int dim) {
  std::vector<Subsystem> subs;
  subs.reserve(labels.size());
  for (const auto& label : labels) subs.push_back({label, dim});
  return SubsystemLayout(std::move(subs));
}

SubsystemLayout SubsystemLayout::uniform(std::initializer_list<std::string> labels, int dim) {
  return uniform(std::span<const std::string>(labels.begin(), labels.size()), dim);
}

void SubsystemLayout::validate() {
  std::set<std::string> seen;
  total_dim_ = 1;
  for (const auto& s : subsystems_) {
    if (s.dim < 1) {
      throw std::invalid_argument("subsystem '" + s.label + "' has non-positive dimension");
    }
    if (!seen.insert(s.label).second) {
      throw std::invalid_argument("duplicate subsystem label '" + s.label + "'");
    }
    total_dim_ *= s.dim;
  }
}

std::vector<int> SubsystemLayout::dims() const {
  std::vector<int> out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.dim);
  return out;
}

std::vector<std::string> SubsystemLayout::labels() const {
  std::vector<std::string> out;
  out.reserve(subsystems_.size());
  for (const auto& s : subsystems_) out.push_back(s.label);
  return out;
}

std::optional<std::size_t> SubsystemLayout::find(std::string_view label) const {
  for (std::size_t i = 0; i < subsystems_.size(); ++i) {
    if (subsystems_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t SubsystemLayout::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw std::invalid_argument("unknown subsystem label '" + std::string(label) + "'");
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
  std::vector<Subsystem> subs = subsystems_;
  subs.insert(subs.end(), other.subsystems_.begin(), other.subsystems_.end());
  return SubsystemLayout(std::move(subs));
}

SubsystemLayout SubsystemLayout::select(std::span<const std::size_t> indices) const {
  std::vector<Subsystem> subs;
  subs.reserve(indices.size());
  for (auto i : indices) subs.push_back(subsystems_.at(i));
  return SubsystemLayout(std::move(subs));
}

// ---------------------------------------------------------------------------
// States and operators

StateVector::StateVector(SubsystemLayout layout, Vector amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.total_dim()) {
    throw std::invalid_argument("state amplitude count does not match layout dimension");
  }
}

StateVector StateVector::normalized(SubsystemLayout layout, Vector amplitudes) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  amplitudes /= n;
  return StateVector(std::move(layout), std::move(amplitudes));
}

StateVector StateVector::basis(SubsystemLayout layout, Eigen::Index index) {
  Vector v = Vector::Zero(layout.total_dim());
  if (index < 0 || index >= v.size()) throw std::out_of_range("basis index out of range");
  v(index) = 1.0;
  return StateVector(std::move(layout), std::move(v));
}

LabeledOperator::LabeledOperator(SubsystemLayout layout, Matrix matrix)
    : layout_(std::move(layout)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() != layout_.total_dim()) {
    throw std::invalid_argument("operator shape does not match layout dimension");
  }
}

LabeledOperator LabeledOperator::identity(SubsystemLayout layout) {
  const auto n = layout.total_dim();
  return LabeledOperator(std::move(layout), Matrix::Identity(n, n));
}

LabeledOperator LabeledOperator::projector(const StateVector& psi) {
  return LabeledOperator(psi.layout(), psi.amplitudes() * psi.amplitudes().adjoint());
}

double LabeledOperator::hermiticity_residual() const {
  return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

DensityOperator::DensityOperator(Unchecked, SubsystemLayout layout, Matrix matrix)
    : op_(std::move(layout), std::move(matrix)) {}

DensityOperator::DensityOperator(SubsystemLayout layout, Matrix matrix)
    : op_(std::move(layout), std::move(matrix)) {
  if (op_.hermiticity_residual() > tol::kHermitian) {
    throw std::invalid_argument("density operator is not Hermitian");
  }
  if (std::abs(op_.trace() - 1.0) > tol::kNorm) {
    throw std::invalid_argument("density operator does not have unit trace");
  }
  if (min_eigenvalue(op_.matrix()) < -tol::kNorm) {
    throw std::invalid_argument("density operator is not positive semidefinite");
  }
}

DensityOperator DensityOperator::trusted(SubsystemLayout layout, Matrix matrix) {
  return DensityOperator(Unchecked{}, std::move(layout), std::move(matrix));
}

DensityOperator DensityOperator::pure(const StateVector& psi) {
  if (std::abs(psi.norm() - 1.0) > tol::kNorm) {
    throw std::invalid_argument("pure density operator needs a normalized state");
  }
  return trusted(psi.layout(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityOperator DensityOperator::maximally_mixed(SubsystemLayout layout) {
  const auto n = layout.total_dim();
  Matrix m = Matrix::Identity(n, n) / static_cast<double>(n);
  return trusted(std::move(layout), std::move(m));
}

DensityOperator DensityOperator::shrunk(const StateVector& psi, double eta) {
  const auto n = psi.dim();
  Matrix m = eta * psi.amplitudes() * psi.amplitudes().adjoint() +
             (1.0 - eta) * Matrix::Identity(n, n) / static_cast<double>(n);
  return DensityOperator(psi.layout(), std::move(m));
}

// ---------------------------------------------------------------------------
// Composition and reduction

StateVector tensor(const StateVector& a, const StateVector& b) {
  auto layout = a.layout().concat(b.layout());
  Vector v(a.dim() * b.dim());
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    v.segment(i * b.dim(), b.dim()) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(std::move(layout), std::move(v));
}

LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b) {
  auto layout = a.layout().concat(b.layout());
  return LabeledOperator(std::move(layout), kron(a.matrix(), b.matrix()));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  auto layout = a.layout().concat(b.layout());
  return DensityOperator::trusted(std::move(layout), kron(a.matrix(), b.matrix()));
}

LabeledOperator partial_trace(const LabeledOperator& op, std::span<const std::string> keep) {
  const auto mask = keep_mask_for(op.layout(), keep);
  const auto split = split_index(op.layout(), mask);
  // Bucket the flat indices by traced index: bucket[t][k] = flat.
  std::vector<std::vector<Eigen::Index>> bucket(split.traced_dim,
                                                std::vector<Eigen::Index>(split.kept_dim));
  for (Eigen::Index f = 0; f < op.dim(); ++f) {
    bucket[split.traced[f]][split.kept[f]] = f;
  }
  Matrix out = Matrix::Zero(split.kept_dim, split.kept_dim);
  const Matrix& m = op.matrix();
  for (const auto& rows : bucket) {
    for (Eigen::Index i = 0; i < split.kept_dim; ++i) {
      for (Eigen::Index j = 0; j < split.kept_dim; ++j) {
        out(i, j) += m(rows[i], rows[j]);
      }
    }
  }
  return LabeledOperator(kept_layout(op.layout(), mask), std::move(out));
}

DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::string> keep) {
  auto reduced = partial_trace(rho.op(), keep);
  return DensityOperator::trusted(reduced.layout(), reduced.matrix());
}

DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::string> keep) {
  return partial_trace(rho, std::span<const std::string>(keep.begin(), keep.size()));
}

DensityOperator reduced_state(const StateVector& psi, std::span<const std::string> keep) {
  const auto mask = keep_mask_for(psi.layout(), keep);
  const auto split = split_index(psi.layout(), mask);
  Matrix m = Matrix::Zero(split.kept_dim, split.traced_dim);
  for (Eigen::Index f = 0; f < psi.dim(); ++f) {
    m(split.kept[f], split.traced[f]) = psi.amplitudes()(f);
  }
  Matrix rho = m * m.adjoint();
  return DensityOperator::trusted(kept_layout(psi.layout(), mask), std::move(rho));
}

DensityOperator reduced_state(const StateVector& psi, std::initializer_list<std::string> keep) {
  return reduced_state(psi, std::span<const std::string>(keep.begin(), keep.size()));
}

Matrix permutation_matrix(const SubsystemLayout& layout, std::span<const std::size_t> order) {
  const auto dims = layout.dims();
  const auto new_layout = layout.select(order);
  const auto new_strides = strides_of(new_layout.dims());
  const Eigen::Index total = layout.total_dim();
  Matrix p = Matrix::Zero(total, total);
  std::vector<int> digits(dims.size(), 0);
  for (Eigen::Index flat = 0; flat < total; ++flat) {
    Eigen::Index target = 0;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      target += digits[order[pos]] * new_strides[pos];
    }
    p(target, flat) = 1.0;
    for (std::size_t i = dims.size(); i-- > 0;) {
      if (++digits[i] < dims[i]) break;
      digits[i] = 0;
    }
  }
  return p;
}

LabeledOperator permute(const LabeledOperator& op, std::span<const std::string> order) {
  const auto idx = order_indices(op.layout(), order);
  const Matrix p = permutation_matrix(op.layout(), idx);
  return LabeledOperator(op.layout().select(idx), p * op.matrix() * p.transpose());
}

StateVector permute(const StateVector& psi, std::span<const std::string> order) {
  const auto idx = order_indices(psi.layout(), order);
  const Matrix p = permutation_matrix(psi.layout(), idx);
  return StateVector(psi.layout().select(idx), p * psi.amplitudes());
}

LabeledOperator conjugate_local(const LabeledOperator& op, std::string_view label, const Matrix& u) {
  const auto target = op.layout().index_of(label);
  if (u.rows() != op.layout()[target].dim || u.cols() != u.rows()) {
    throw std::invalid_argument("local unitary dimension does not match subsystem");
  }
  Matrix full = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < op.layout().size(); ++i) {
    const int d = op.layout()[i].dim;
    full = kron(full, i == target ? u : Matrix::Identity(d, d));
  }
  return LabeledOperator(op.layout(), full * op.matrix() * full.adjoint());
}

// ---------------------------------------------------------------------------
// Spectra

EigenSystem eig_hermitian(const Matrix& op) {
  if (op.rows() != op.cols()) throw std::invalid_argument("eig_hermitian: matrix is not square");
  if (op.size() > 0 && (op - op.adjoint()).cwiseAbs().maxCoeff() > tol::kHermitian) {
    throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_hermitian: solver failed");
  const auto n = op.rows();
  EigenSystem out{RealVector(n), Matrix(n, n)};
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = solver.eigenvalues()(n - 1 - i);
    out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
  }
  return out;
}

double min_eigenvalue(const Matrix& op) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(op, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

// ---------------------------------------------------------------------------
// Random sampling

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = uniform();
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(phi);
  return r * std::cos(phi);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Complex(re, im) / std::numbers::sqrt2;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

StateVector haar_random_state(int d, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_state(d, rng);
}

StateVector haar_random_state(int d, Rng& rng, std::string label) {
  if (d < 2) throw std::invalid_argument("haar_random_state: dimension must be at least 2");
  Vector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return StateVector::normalized(SubsystemLayout{{std::move(label), d}}, std::move(v));
}

Matrix haar_random_unitary(int d, Rng& rng) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex rii = r(i, i);
    q.col(i) *= rii / std::abs(rii);
  }
  return q;
}

// ---------------------------------------------------------------------------
// Fidelities

SampleStats summarize(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("summarize: empty sample");
  SampleStats st;
  st.count = static_cast<int>(values.size());
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  st.min = *lo;
  st.max = *hi;
  st.mean = std::accumulate(values.begin(), values.end(), 0.0) / st.count;
  double var = 0.0;
  for (double v : values) var += (v - st.mean) * (v - st.mean);
  st.stddev = std::sqrt(var / st.count);
  return st;
}

double fidelity_pure(const DensityOperator& rho, const StateVector& psi) {
  if (rho.dim() != psi.dim()) throw std::invalid_argument("fidelity_pure: dimension mismatch");
  const Complex f = psi.amplitudes().dot(rho.matrix() * psi.amplitudes());
  if (std::abs(f.imag()) > 1e-12) {
    throw std::runtime_error("fidelity_pure: non-real overlap, operator is not Hermitian");
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

double fidelity_to_eta(double fidelity, int d) {
  if (d < 2) throw std::invalid_argument("fidelity_to_eta: dimension must be at least 2");
  const double floor = 1.0 / d;
  if (fidelity < -tol::kEqual || fidelity > 1.0 + tol::kEqual) {
    throw std::invalid_argument("fidelity_to_eta: fidelity outside [0, 1]");
  }
  return (fidelity - floor) / (1.0 - floor);
}

double eta_to_fidelity(double eta, int d) {
  return eta + (1.0 - eta) / d;
}

StateVector max_entangled(int d, const std::string& first, const std::string& second) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d) * d);
  for (int j = 0; j < d; ++j) v(j * d + j) = 1.0 / std::sqrt(static_cast<double>(d));
  return StateVector(SubsystemLayout{{first, d}, {second, d}}, std::move(v));
}

}  // namespace clonebench
