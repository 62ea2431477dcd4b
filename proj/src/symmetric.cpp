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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace clonebench {

SubsystemLayout qubit_layout(int n) {
  std::vector<Subsystem> subs;
  for (int i = 0; i < n; ++i) subs.push_back({"q" + std::to_string(i), 2});
  return SubsystemLayout(std::move(subs));
}

SubsystemLayout clone_layout_1n(int n) {
  std::vector<Subsystem> subs{{"A", 2}};
  for (int i = 1; i <= n; ++i) subs.push_back({"B" + std::to_string(i), 2});
  return SubsystemLayout(std::move(subs));
}

LabeledOperator permutation_operator(const SubsystemLayout& layout, std::span<const std::size_t> perm) {
  if (perm.size() != layout.size()) {
    throw std::invalid_argument("permutation_operator: permutation length does not match layout");
  }
  for (const auto& s : layout) {
    if (s.dim != layout[0].dim) {
      throw std::invalid_argument("permutation_operator: subsystems must share one dimension");
    }
  }
  return LabeledOperator(layout, permutation_matrix(layout, perm));
}

LabeledOperator sym_projector(int n) {
  if (n < 1) throw std::invalid_argument("sym_projector: need at least one qubit");
  return sym_projector(qubit_layout(n));
}

LabeledOperator sym_projector(const SubsystemLayout& layout) {
  const int n = static_cast<int>(layout.size());
  if (n < 1) throw std::invalid_argument("sym_projector: need at least one qubit");
  if (n > kMaxSymmetricQubits) throw std::invalid_argument("sym_projector: too many qubits");
  for (const auto& s : layout) {
    if (s.dim != 2) throw std::invalid_argument("sym_projector: layout must consist of qubits");
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    // Bit (n-1-i) of a flat index is qubit i.
    for (Eigen::Index f = 0; f < dim; ++f) {
      Eigen::Index g = 0;
      for (int pos = 0; pos < n; ++pos) {
        const Eigen::Index bit = (f >> (n - 1 - perm[pos])) & 1;
        g |= bit << (n - 1 - pos);
      }
      acc(g, f) += 1.0;
    }
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  acc /= static_cast<double>(count);
  return LabeledOperator(layout, acc.cast<Complex>());
}

StateVector dicke_state(int n, int k) {
  if (n < 1) throw std::invalid_argument("dicke_state: need at least one qubit");
  if (k < 0 || k > n) throw std::invalid_argument("dicke_state: excitation count out of range");
  const Eigen::Index dim = Eigen::Index{1} << n;
  Vector v = Vector::Zero(dim);
  for (Eigen::Index f = 0; f < dim; ++f) {
    if (std::popcount(static_cast<unsigned long long>(f)) == k) v(f) = 1.0;
  }
  return StateVector::normalized(qubit_layout(n), std::move(v));
}

CGProjectors cg_projectors(int n) {
  if (n < 2) {
    throw std::invalid_argument(
        "cg_projectors: n must be at least 2 (n = 1 is the bipartite cloner, see tripartite with gamma = 0)");
  }
  const auto layout = clone_layout_1n(n);
  auto s_plus = sym_projector(layout);
  std::vector<Subsystem> b_subs(layout.begin() + 1, layout.end());
  auto one_sym = tensor(LabeledOperator::identity(SubsystemLayout{{"A", 2}}),
                        sym_projector(SubsystemLayout(std::move(b_subs))));
  LabeledOperator s_minus(layout, one_sym.matrix() - s_plus.matrix());
  return CGProjectors{n, std::move(s_plus), std::move(s_minus)};
}

}  // namespace clonebench
