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

#ifndef CLONEBENCH_CHOI_HPP
#define CLONEBENCH_CHOI_HPP

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "clonebench/linalg.hpp"

// Optimal universal 1 -> 3 cloners from the Choi representation of CP maps.
// A channel is stored as an operator S on in (x) outputs; it acts as
// rho -> Tr_in[(rho^T (x) 1) S].
namespace clonebench::choi {

inline constexpr const char* kInputLabel = "in";
inline const std::array<std::string, 3> kCloneLabels{"A", "B", "C"};

/// Convex weights (a, b, c) of the three clone fidelities.
struct ScoreWeights {
  double a = 1.0 / 3;
  double b = 1.0 / 3;
  double c = 1.0 / 3;

  /// Throws std::invalid_argument unless all are >= 0 and sum to 1 within 1e-12.
  static ScoreWeights make(double a, double b, double c);
  std::array<double, 3> as_array() const { return {a, b, c}; }
};

/// Choi operator of a map from subsystem "in" (the first factor) to the
/// remaining factors. Positivity and trace preservation are not enforced
/// here; see verify_choi.
class ChoiOperator {
 public:
  /// Throws std::invalid_argument if the first subsystem is not labeled "in"
  /// or there are no outputs.
  explicit ChoiOperator(LabeledOperator op);

  /// d |Phi+><Phi+| on in (x) out.
  static ChoiOperator identity_channel(int d, const std::string& out = "A");

  const LabeledOperator& op() const { return op_; }
  const Matrix& matrix() const { return op_.matrix(); }
  const SubsystemLayout& layout() const { return op_.layout(); }
  int input_dim() const { return op_.layout()[0].dim; }
  SubsystemLayout output_layout() const;

 private:
  LabeledOperator op_;
};

struct ScoreOperator {
  LabeledOperator op;  // on in, A, B, C
  std::string label;   // "A", "B", "C" or "a*A+b*B+c*C"
};

/// Haar average of psi^T (x) psi, i.e. E[conj(psi) psi^T (x) psi psi^dagger],
/// in closed form (1 + d |Phi+><Phi+|) / (d (d+1)) on layout {in, out}.
LabeledOperator haar_pair_operator(int d);

/// Score of a single clone: haar_pair_operator on (in, clone), identity on the rest.
ScoreOperator clone_score(int d, std::string_view clone);

/// a L_A + b L_B + c L_C.
ScoreOperator build_score(int d, const ScoreWeights& w);

struct ScoreMaximum {
  ChoiOperator choi;
  double bound = 0.0;     // d * lambda_max
  double achieved = 0.0;  // Tr[S L]
  int degeneracy = 0;     // dimension of the top eigenspace
};

/// Maximizes Tr[S L] over trace-preserving CP maps using the top eigenspace
/// of L. Eigenvalues within 1e-9 lambda_max of the top one are counted.
/// Throws std::runtime_error if no PSD operator on that eigenspace is trace
/// preserving.
ScoreMaximum maximize_score(const ScoreOperator& score);

/// PSD operator V X V^dagger on the column span of V (orthonormal columns,
/// layout `layout` with "in" first) satisfying Tr_out = 1. Uses the
/// isotropic choice when it is already trace preserving, otherwise the
/// least-squares correction closest to it. Throws std::runtime_error if the
/// correction is not PSD or misses trace preservation.
ChoiOperator trace_preserving_on_span(const SubsystemLayout& layout, const Matrix& span);

/// Tr[S L_clone].
double choi_fidelity(const ChoiOperator& s, std::string_view clone);

struct OptimalCloner {
  ChoiOperator choi;
  double bound = 0.0;
  double achieved = 0.0;
  int degeneracy = 0;
  std::array<double, 3> fidelities{};  // Tr[S L_X] for A, B, C
};

OptimalCloner optimal_cloner(int d, const ScoreWeights& w);

/// Tr_in[(rho^T (x) 1) S]. Throws std::invalid_argument on a dimension mismatch.
DensityOperator apply_choi(const ChoiOperator& s, const DensityOperator& rho);

struct ChoiReport {
  double psd_residual = 0.0;    // max(0, -lambda_min)
  double tp_residual = 0.0;     // max |Tr_out S - 1|
  double trace_residual = 0.0;  // |Tr S - d|
  double hermiticity_residual = 0.0;

  bool ok(double tolerance) const;
};

ChoiReport verify_choi(const ChoiOperator& s);

}  // namespace clonebench::choi

#endif  // CLONEBENCH_CHOI_HPP
