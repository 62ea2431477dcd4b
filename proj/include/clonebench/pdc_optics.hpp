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

#ifndef CLONEBENCH_PDC_OPTICS_HPP
#define CLONEBENCH_PDC_OPTICS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clonebench/linalg.hpp"

// Fock-space simulation of cloning by stimulated parametric down-conversion.
// Modes are (spatial label, polarization) pairs; states are sparse tables of
// occupation-number amplitudes.
namespace clonebench::optics {

enum class Polarization { V, H };

struct Mode {
  std::string spatial;
  Polarization pol = Polarization::V;

  /// "VS", "HI", ...
  std::string name() const;
  bool operator==(const Mode&) const = default;
};

/// Ordered list of modes. Spatial modes are always registered with both
/// polarizations, V first.
class ModeRegistry {
 public:
  ModeRegistry() = default;

  /// Signal S and idler I: VS, HS, VI, HI.
  static ModeRegistry signal_idler();

  /// Registers V and H for a new spatial label; throws std::invalid_argument if present.
  void add_spatial(const std::string& spatial);

  std::size_t size() const { return modes_.size(); }
  const Mode& operator[](std::size_t i) const { return modes_[i]; }
  const std::vector<Mode>& modes() const { return modes_; }
  std::vector<std::string> spatial_labels() const;
  bool has_spatial(std::string_view spatial) const;

  /// Throws std::invalid_argument for an unknown mode.
  std::size_t index(std::string_view spatial, Polarization pol) const;

  bool operator==(const ModeRegistry&) const = default;

 private:
  std::vector<Mode> modes_;
};

using Occupation = std::vector<int>;

/// Sparse Fock-basis state. Subnormalized tables are allowed.
class FockAmplitudeTable {
 public:
  FockAmplitudeTable(ModeRegistry registry, int cutoff);

  static FockAmplitudeTable vacuum(ModeRegistry registry, int cutoff);

  const ModeRegistry& registry() const { return registry_; }
  int cutoff() const { return cutoff_; }
  const std::map<Occupation, Complex>& amplitudes() const { return amps_; }

  /// Accumulates `value` onto the amplitude of `occ`. Throws
  /// std::invalid_argument on a wrong length, negative entry, or a total
  /// above the cutoff.
  void add(const Occupation& occ, Complex value);
  Complex amplitude(const Occupation& occ) const;

  double norm_squared() const;
  std::size_t support_size() const { return amps_.size(); }

  /// coef * a^dagger_mode |this>. Throws std::length_error past the cutoff.
  FockAmplitudeTable create(std::size_t mode, Complex coef = 1.0) const;
  /// coef * a_mode |this>.
  FockAmplitudeTable annihilate(std::size_t mode, Complex coef = 1.0) const;

  FockAmplitudeTable& operator+=(const FockAmplitudeTable& other);
  FockAmplitudeTable& operator*=(Complex s);

  /// Drops amplitudes with |a| <= eps.
  void prune(double eps);

 private:
  ModeRegistry registry_;
  int cutoff_;
  std::map<Occupation, Complex> amps_;
};

/// Copy with a new empty spatial mode (both polarizations) appended.
FockAmplitudeTable add_spatial_mode(const FockAmplitudeTable& state, const std::string& spatial);

/// Linear substitution a^dagger_m -> sum_j u(j, m) a^dagger_j applied to every
/// creation operator, for a square matrix u on the registry modes.
FockAmplitudeTable apply_mode_transform(const FockAmplitudeTable& state, const Eigen::MatrixXcd& u);

/// Lossless two-port splitter on both polarizations:
///   a1^dagger -> sqrt(T) a1^dagger + sqrt(1-T) a2^dagger
///   a2^dagger -> sqrt(1-T) a1^dagger - sqrt(T) a2^dagger
/// Output ports keep the input labels. Throws std::invalid_argument for T
/// outside [0, 1], unknown or identical modes.
FockAmplitudeTable beam_splitter(const FockAmplitudeTable& state, const std::string& in1, const std::string& in2,
                                 double t);

/// Polarization unitary on one spatial mode; u acts on (V, H) creation operators.
FockAmplitudeTable polarization_transform(const FockAmplitudeTable& state, const std::string& spatial,
                                          const Eigen::Matrix2cd& u);

/// Required photon count per spatial mode.
using PostselectPattern = std::map<std::string, int>;

struct Postselection {
  FockAmplitudeTable state;  // renormalized; empty when probability is zero
  double probability = 0.0;  // ||P psi||^2 / ||psi||^2
};

/// Projects on the photon-count sector. A zero-probability sector is reported
/// through probability == 0, not thrown. Throws std::invalid_argument for an
/// unknown mode or a negative count.
Postselection postselect(const FockAmplitudeTable& state, const PostselectPattern& pattern);

/// Input polarization alpha |V> + beta |H>.
struct QubitInput {
  Complex alpha = 1.0;
  Complex beta = 0.0;

  /// Throws std::invalid_argument unless |alpha|^2 + |beta|^2 = 1 within 1e-12.
  static QubitInput make(Complex alpha, Complex beta);
  static QubitInput from_state(const StateVector& psi);
};

/// Single-photon fidelity of the photons in `spatial` with the input:
/// ||b psi||^2 / (m ||psi||^2), b = conj(alpha) a_V + conj(beta) a_H, m the
/// photon number there. Throws std::invalid_argument if the mode is empty or
/// its photon number is not definite.
double polarization_fidelity(const FockAmplitudeTable& state, const std::string& spatial, const QubitInput& psi);

/// Photon number in `spatial` if it is the same on the whole support.
std::optional<int> definite_photon_number(const FockAmplitudeTable& state, const std::string& spatial);

enum class PdcEngine {
  kExactSector,  // closed-form k-pair component
  kExponential,  // e^{-i tau H} on a truncated Fock space
};

struct PdcResult {
  FockAmplitudeTable state;  // k-pair component, unnormalized
  /// Exponential engine: population in the highest reachable photon shell,
  /// a proxy for the truncation error. Zero for the exact engine.
  double leakage = 0.0;
};

/// k-pair component of exp(-i tau (G + G^dagger)) (alpha a_VS^dagger + beta a_HS^dagger)^N |vac> / sqrt(N!),
/// G = a_VS^dagger a_HI^dagger - a_HS^dagger a_VI^dagger.
///
/// The exact engine uses the disentangled form
///   cosh(tau)^-(N+2) (-i tanh tau)^k / k! G^k |in>.
/// cutoff < 0 selects the default: N + 2k for the exact engine; for the
/// exponential engine enough extra pairs that the truncated shell is negligible.
/// Throws std::invalid_argument for N < 1, k < 0, or a cutoff below N + 2k.
PdcResult stimulated_pdc(int photons, const QubitInput& psi, int pairs, double tau, PdcEngine engine,
                         int cutoff = -1);

/// Polarization map applied to the idler before it meets a clone.
enum class IdlerPrep {
  kIdentity,  // no transformation
  kFlip,      // V -> H, H -> -V
  kFlipNeg,   // V -> -H, H -> V
  kSwap,      // V <-> H
  kPhase,     // H -> -H
};

struct SchemeOptions {
  double split = 0.5;  // transmittance of the clone-splitting beam splitters
  PdcEngine engine = PdcEngine::kExactSector;
  double tau = 0.1;
  IdlerPrep prep = IdlerPrep::kIdentity;
};

struct PairFidelities {
  double f_a = 0.0;
  double f_b = 0.0;
  /// Product of the conditional postselection probabilities, starting from
  /// the normalized pair sector.
  double probability = 0.0;
};

struct TripleFidelities {
  double f_a = 0.0;
  double f_b = 0.0;
  double f_c = 0.0;
  double probability = 0.0;
};

/// One pair; the two clones are split (A, S), then S is mixed with the idler
/// at transmittance T; one photon in each of A, S (clone B) and I.
/// Throws std::runtime_error on a zero-probability outcome.
PairFidelities scheme_1_to_11(double t, const QubitInput& psi, const SchemeOptions& opts = {});

enum class Branch12 {
  kSingleInA,  // one photon in A, two in B
  kPairInA,    // two photons in A, one in B
};

/// Two pairs; split (A, S), mix S with the idler at T, and postselect the
/// branch counts in A and S (clone B) with two photons in I.
PairFidelities scheme_1_to_12(double t, Branch12 branch, const QubitInput& psi, const SchemeOptions& opts = {});

/// Closed forms of scheme_1_to_12 in its own labeling (F^A, F^B).
std::pair<double, double> scheme_1_to_12_closed_form(double t, Branch12 branch);

/// Two pairs. Stage 1 splits off A and mixes S with the idler at T1, keeping
/// one photon in A and two in S. Stage 2 splits S into S (clone B) and C and
/// mixes C with the idler at T2; one photon in each clone arm.
TripleFidelities scheme_1_to_111(double t1, double t2, const QubitInput& psi, const SchemeOptions& opts = {});

}  // namespace clonebench::optics

#endif  // CLONEBENCH_PDC_OPTICS_HPP
