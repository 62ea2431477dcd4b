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

#ifndef CLONEBENCH_SYMMETRIC_HPP
#define CLONEBENCH_SYMMETRIC_HPP

#include <span>
#include <string>
#include <vector>

#include "clonebench/linalg.hpp"

namespace clonebench {

/// Largest qubit count accepted by sym_projector (sum over n! permutations).
inline constexpr int kMaxSymmetricQubits = 8;

/// Qubit layout labeled q0 .. q{n-1}.
SubsystemLayout qubit_layout(int n);

/// Layout of a 1 -> 1+n qubit cloner output: A, B1 .. Bn.
SubsystemLayout clone_layout_1n(int n);

/// Operator permuting the tensor factors of `layout` (all local dims equal):
/// P |i_0 ... i_{n-1}> = |i_{perm[0]} ... i_{perm[n-1]}>.
LabeledOperator permutation_operator(const SubsystemLayout& layout, std::span<const std::size_t> perm);

/// Projector onto Sym((C^2)^{x n}) as the average of all n! permutation
/// operators. Labels come from `layout` when given.
LabeledOperator sym_projector(int n);
LabeledOperator sym_projector(const SubsystemLayout& layout);

/// Normalized permutation-symmetric n-qubit state with k excitations (|1>s).
StateVector dicke_state(int n, int k);

/// The two irreducible blocks of C^2 (x) Sym((C^2)^{x n}):
/// s_plus projects on total spin (n+1)/2, s_minus on total spin (n-1)/2.
struct CGProjectors {
  int n = 0;
  LabeledOperator s_plus;
  LabeledOperator s_minus;
};

/// Builds S_{n+1} = Sym_{n+1} and S_{n-1} = (1 (x) Sym_n) - S_{n+1} on the
/// clone layout A, B1 .. Bn. Requires n >= 2.
CGProjectors cg_projectors(int n);

}  // namespace clonebench

#endif  // CLONEBENCH_SYMMETRIC_HPP
