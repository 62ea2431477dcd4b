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

#ifndef CLONEBENCH_LINALG_HPP
#define CLONEBENCH_LINALG_HPP

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace clonebench {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Central numerical tolerances shared by every module.
namespace tol {
inline constexpr double kHermitian = 1e-10;  // Hermiticity / norm checks
inline constexpr double kNorm = 1e-10;
inline constexpr double kUnitNorm = 1e-12;  // normalized constructors
inline constexpr double kEqual = 1e-9;      // equality assertions
}  // namespace tol

struct Subsystem {
  std::string label;
  int dim = 0;

  bool operator==(const Subsystem&) const = default;
};

/// Ordered list of named subsystems. Layout order is the Kronecker order:
/// the first subsystem is the most significant digit of a flat index.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  SubsystemLayout(std::initializer_list<Subsystem> subsystems);
  explicit SubsystemLayout(std::vector<Subsystem> subsystems);

  /// Layout with the given labels, all of local dimension `dim`.
  static SubsystemLayout uniform(std::span<const std::string> labels, int dim);
  static SubsystemLayout uniform(std::initializer_list<std::string> labels, int dim);

  std::size_t size() const { return subsystems_.size(); }
  const Subsystem& operator[](std::size_t i) const { return subsystems_[i]; }
  auto begin() const { return subsystems_.begin(); }
  auto end() const { return subsystems_.end(); }

  Eigen::Index total_dim() const { return total_dim_; }
  std::vector<int> dims() const;
  std::vector<std::string> labels() const;

  std::optional<std::size_t> find(std::string_view label) const;
  /// Index of `label`; throws std::invalid_argument for unknown labels.
  std::size_t index_of(std::string_view label) const;

  /// Concatenation; throws std::invalid_argument on a duplicate label.
  SubsystemLayout concat(const SubsystemLayout& other) const;
  /// Sub-layout in the given order (indices into this layout).
  SubsystemLayout select(std::span<const std::size_t> indices) const;

  bool operator==(const SubsystemLayout& other) const { return subsystems_ == other.subsystems_; }

 private:
  void validate();

  std::vector<Subsystem> subsystems_;
  Eigen::Index total_dim_ = 1;
};

/// Pure state over a labeled layout.
class StateVector {
 public:
  StateVector(SubsystemLayout layout, Vector amplitudes);

  /// Rescales to unit norm; throws on a zero vector.
  static StateVector normalized(SubsystemLayout layout, Vector amplitudes);
  static StateVector basis(SubsystemLayout layout, Eigen::Index index);

  const SubsystemLayout& layout() const { return layout_; }
  const Vector& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  double norm() const { return amplitudes_.norm(); }

 private:
  SubsystemLayout layout_;
  Vector amplitudes_;
};

/// Square operator acting on a labeled layout. No positivity or trace
/// constraints; projectors, Choi and score operators live here.
class LabeledOperator {
 public:
  LabeledOperator(SubsystemLayout layout, Matrix matrix);

  static LabeledOperator identity(SubsystemLayout layout);
  static LabeledOperator projector(const StateVector& psi);

  const SubsystemLayout& layout() const { return layout_; }
  const Matrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

  Complex trace() const { return matrix_.trace(); }
  /// max |A - A^dagger| entry.
  double hermiticity_residual() const;

 private:
  SubsystemLayout layout_;
  Matrix matrix_;
};

/// Density operator: Hermitian, unit trace, positive semidefinite.
class DensityOperator {
 public:
  /// Validates Hermiticity, trace and positivity; throws std::invalid_argument.
  DensityOperator(SubsystemLayout layout, Matrix matrix);

  static DensityOperator pure(const StateVector& psi);
  static DensityOperator maximally_mixed(SubsystemLayout layout);
  /// eta |psi><psi| + (1 - eta) 1/d.
  static DensityOperator shrunk(const StateVector& psi, double eta);
  /// Skips validation; for results of operations that preserve the invariants.
  static DensityOperator trusted(SubsystemLayout layout, Matrix matrix);

  const SubsystemLayout& layout() const { return op_.layout(); }
  const Matrix& matrix() const { return op_.matrix(); }
  const LabeledOperator& op() const { return op_; }
  Eigen::Index dim() const { return op_.dim(); }
  double trace() const { return op_.trace().real(); }

 private:
  struct Unchecked {};
  DensityOperator(Unchecked, SubsystemLayout layout, Matrix matrix);

  LabeledOperator op_;
};

// ---------------------------------------------------------------------------
// Composition and reduction

StateVector tensor(const StateVector& a, const StateVector& b);
LabeledOperator tensor(const LabeledOperator& a, const LabeledOperator& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

/// Partial trace keeping the labeled subsystems. The result is ordered by the
/// original layout, not by the order of `keep`.
LabeledOperator partial_trace(const LabeledOperator& op, std::span<const std::string> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::span<const std::string> keep);
DensityOperator partial_trace(const DensityOperator& rho, std::initializer_list<std::string> keep);
/// Reduced state of a pure state; avoids forming the full projector.
DensityOperator reduced_state(const StateVector& psi, std::span<const std::string> keep);
DensityOperator reduced_state(const StateVector& psi, std::initializer_list<std::string> keep);

/// Explicit subsystem reordering; `order` must be a permutation of the labels.
LabeledOperator permute(const LabeledOperator& op, std::span<const std::string> order);
StateVector permute(const StateVector& psi, std::span<const std::string> order);
/// Matrix P with P |i_0 ... i_{n-1}> = |i_{order[0]} ... i_{order[n-1]}>.
Matrix permutation_matrix(const SubsystemLayout& layout, std::span<const std::size_t> order);

/// Conjugates by U on one subsystem (identity elsewhere): (1 x U x 1) A (1 x U x 1)^dagger.
LabeledOperator conjugate_local(const LabeledOperator& op, std::string_view label, const Matrix& u);

// ---------------------------------------------------------------------------
// Spectra

struct EigenSystem {
  RealVector values;  // descending
  Matrix vectors;     // columns, orthonormal
};

/// Hermitian eigendecomposition, eigenvalues sorted descending. Throws
/// std::invalid_argument when the input is not Hermitian within tol::kHermitian.
EigenSystem eig_hermitian(const Matrix& op);
double min_eigenvalue(const Matrix& op);

// ---------------------------------------------------------------------------
// Random sampling

/// Seeded generator built on std::mt19937_64, whose output sequence is fixed
/// by the standard. Gaussian draws use Box-Muller on raw 64-bit words rather
/// than std::normal_distribution, which differs between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double normal();
  Complex complex_normal();  // E|z|^2 = 1
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Derives an independent stream seed (SplitMix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

StateVector haar_random_state(int d, std::uint64_t seed);
StateVector haar_random_state(int d, Rng& rng, std::string label = "psi");
/// Haar unitary via QR of a Ginibre matrix with the R-diagonal phases fixed.
Matrix haar_random_unitary(int d, Rng& rng);

// ---------------------------------------------------------------------------
// Fidelities

/// Summary of per-input fidelities over a Haar sample.
struct SampleStats {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;
  double stddev = 0.0;  // population standard deviation
  int count = 0;
};

/// Throws std::invalid_argument on an empty sample.
SampleStats summarize(std::span<const double> values);

/// <psi| rho |psi>, clamped to [0, 1]. Throws on dimension mismatch or on an
/// imaginary residue above 1e-12.
double fidelity_pure(const DensityOperator& rho, const StateVector& psi);

/// Shrinking factor eta = (F - 1/d) / (1 - 1/d), negative below F = 1/d.
/// Throws for F outside [0, 1].
double fidelity_to_eta(double fidelity, int d);
double eta_to_fidelity(double eta, int d);

/// |Phi+> = d^{-1/2} sum_j |j>|j> on two subsystems with the given labels.
StateVector max_entangled(int d, const std::string& first, const std::string& second);

}  // namespace clonebench

#endif  // CLONEBENCH_LINALG_HPP
