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

#include "clonebench/pdc_optics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace clonebench::optics {
namespace {

constexpr const char* kSignal = "S";
constexpr const char* kIdler = "I";

int total(const Occupation& occ) {
  return std::accumulate(occ.begin(), occ.end(), 0);
}

double factorial(int n) {
  return std::tgamma(n + 1.0);
}

// Applies G = a_VS^dagger a_HI^dagger - a_HS^dagger a_VI^dagger.
FockAmplitudeTable apply_pair_creation(const FockAmplitudeTable& state) {
  const auto& reg = state.registry();
  const auto vs = reg.index(kSignal, Polarization::V), hs = reg.index(kSignal, Polarization::H);
  const auto vi = reg.index(kIdler, Polarization::V), hi = reg.index(kIdler, Polarization::H);
  FockAmplitudeTable out = state.create(hi).create(vs);
  out += state.create(vi, -1.0).create(hs);
  return out;
}

Eigen::Matrix2cd prep_matrix(IdlerPrep prep) {
  Eigen::Matrix2cd u;
  switch (prep) {
    case IdlerPrep::kIdentity:
      u << 1, 0, 0, 1;
      break;
    case IdlerPrep::kFlip:
      u << 0, -1, 1, 0;
      break;
    case IdlerPrep::kFlipNeg:
      u << 0, 1, -1, 0;
      break;
    case IdlerPrep::kSwap:
      u << 0, 1, 1, 0;
      break;
    case IdlerPrep::kPhase:
      u << 1, 0, 0, -1;
      break;
  }
  return u;
}

FockAmplitudeTable normalized(FockAmplitudeTable state) {
  const double n2 = state.norm_squared();
  if (n2 <= 0.0) throw std::runtime_error("scheme: pair sector is empty (tau = 0?)");
  state *= 1.0 / std::sqrt(n2);
  return state;
}

// Normalized pair sector with the idler prepared; returns the table.
FockAmplitudeTable prepared_source(int pairs, const QubitInput& psi, const SchemeOptions& opts) {
  auto source = normalized(stimulated_pdc(1, psi, pairs, opts.tau, opts.engine).state);
  if (opts.prep != IdlerPrep::kIdentity) source = polarization_transform(source, kIdler, prep_matrix(opts.prep));
  return source;
}

Postselection require(const FockAmplitudeTable& state, const PostselectPattern& pattern) {
  auto post = postselect(state, pattern);
  if (post.probability <= 1e-300) throw std::runtime_error("scheme: postselected outcome has zero probability");
  return post;
}

// Default number of extra pairs above the requested sector for the dense
// engine: enough that the next shell is below double precision.
int default_extra_pairs(double tau) {
  const double r = std::tanh(std::abs(tau));
  if (r <= 0.0) return 2;
  const double m = std::ceil(std::log(1e-17) / (2.0 * std::log(r)));
  return static_cast<int>(std::clamp(m, 2.0, 40.0));
}

}  // namespace

std::string Mode::name() const {
  return (pol == Polarization::V ? "V" : "H") + spatial;
}

ModeRegistry ModeRegistry::signal_idler() {
  ModeRegistry r;
  r.add_spatial(kSignal);
  r.add_spatial(kIdler);
  return r;
}

void ModeRegistry::add_spatial(const std::string& spatial) {
  if (spatial.empty()) throw std::invalid_argument("ModeRegistry: empty spatial label");
  if (has_spatial(spatial)) throw std::invalid_argument("ModeRegistry: spatial mode '" + spatial + "' already registered");
  modes_.push_back({spatial, Polarization::V});
  modes_.push_back({spatial, Polarization::H});
}

std::vector<std::string> ModeRegistry::spatial_labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < modes_.size(); i += 2) out.push_back(modes_[i].spatial);
  return out;
}

bool ModeRegistry::has_spatial(std::string_view spatial) const {
  return std::any_of(modes_.begin(), modes_.end(), [&](const Mode& m) { return m.spatial == spatial; });
}

std::size_t ModeRegistry::index(std::string_view spatial, Polarization pol) const {
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    if (modes_[i].spatial == spatial && modes_[i].pol == pol) return i;
  }
  throw std::invalid_argument("ModeRegistry: unknown mode '" + std::string(spatial) + "'");
}

FockAmplitudeTable::FockAmplitudeTable(ModeRegistry registry, int cutoff)
    : registry_(std::move(registry)), cutoff_(cutoff) {
  if (cutoff < 0) throw std::invalid_argument("FockAmplitudeTable: negative cutoff");
}

FockAmplitudeTable FockAmplitudeTable::vacuum(ModeRegistry registry, int cutoff) {
  FockAmplitudeTable t(std::move(registry), cutoff);
  t.add(Occupation(t.registry().size(), 0), 1.0);
  return t;
}

void FockAmplitudeTable::add(const Occupation& occ, Complex value) {
  if (occ.size() != registry_.size()) throw std::invalid_argument("FockAmplitudeTable: occupation length mismatch");
  if (std::any_of(occ.begin(), occ.end(), [](int n) { return n < 0; })) {
    throw std::invalid_argument("FockAmplitudeTable: negative occupation");
  }
  if (total(occ) > cutoff_) throw std::invalid_argument("FockAmplitudeTable: occupation exceeds the cutoff");
  amps_[occ] += value;
}

Complex FockAmplitudeTable::amplitude(const Occupation& occ) const {
  const auto it = amps_.find(occ);
  return it == amps_.end() ? Complex(0.0) : it->second;
}

double FockAmplitudeTable::norm_squared() const {
  double n = 0.0;
  for (const auto& [occ, a] : amps_) n += std::norm(a);
  return n;
}

FockAmplitudeTable FockAmplitudeTable::create(std::size_t mode, Complex coef) const {
  if (mode >= registry_.size()) throw std::invalid_argument("FockAmplitudeTable::create: mode out of range");
  FockAmplitudeTable out(registry_, cutoff_);
  for (const auto& [occ, a] : amps_) {
    Occupation next = occ;
    ++next[mode];
    if (total(next) > cutoff_) throw std::length_error("FockAmplitudeTable::create: photon number exceeds the cutoff");
    out.amps_[next] += coef * a * std::sqrt(static_cast<double>(next[mode]));
  }
  return out;
}

FockAmplitudeTable FockAmplitudeTable::annihilate(std::size_t mode, Complex coef) const {
  if (mode >= registry_.size()) throw std::invalid_argument("FockAmplitudeTable::annihilate: mode out of range");
  FockAmplitudeTable out(registry_, cutoff_);
  for (const auto& [occ, a] : amps_) {
    if (occ[mode] == 0) continue;
    Occupation next = occ;
    --next[mode];
    out.amps_[next] += coef * a * std::sqrt(static_cast<double>(occ[mode]));
  }
  return out;
}

FockAmplitudeTable& FockAmplitudeTable::operator+=(const FockAmplitudeTable& other) {
  if (!(other.registry_ == registry_)) throw std::invalid_argument("FockAmplitudeTable: registry mismatch");
  for (const auto& [occ, a] : other.amps_) add(occ, a);
  return *this;
}

FockAmplitudeTable& FockAmplitudeTable::operator*=(Complex s) {
  for (auto& [occ, a] : amps_) a *= s;
  return *this;
}

void FockAmplitudeTable::prune(double eps) {
  std::erase_if(amps_, [eps](const auto& kv) { return std::abs(kv.second) <= eps; });
}

FockAmplitudeTable add_spatial_mode(const FockAmplitudeTable& state, const std::string& spatial) {
  ModeRegistry reg = state.registry();
  reg.add_spatial(spatial);
  FockAmplitudeTable out(reg, state.cutoff());
  for (const auto& [occ, a] : state.amplitudes()) {
    Occupation next = occ;
    next.push_back(0);
    next.push_back(0);
    out.add(next, a);
  }
  return out;
}

FockAmplitudeTable apply_mode_transform(const FockAmplitudeTable& state, const Eigen::MatrixXcd& u) {
  const auto m = static_cast<Eigen::Index>(state.registry().size());
  if (u.rows() != m || u.cols() != m) throw std::invalid_argument("apply_mode_transform: matrix size mismatch");
  FockAmplitudeTable out(state.registry(), state.cutoff());
  for (const auto& [occ, a] : state.amplitudes()) {
    double norm = 1.0;
    for (int n : occ) norm *= factorial(n);
    FockAmplitudeTable term = FockAmplitudeTable::vacuum(state.registry(), state.cutoff());
    term *= a / std::sqrt(norm);
    for (Eigen::Index mode = 0; mode < m; ++mode) {
      for (int rep = 0; rep < occ[mode]; ++rep) {
        FockAmplitudeTable next(state.registry(), state.cutoff());
        for (Eigen::Index j = 0; j < m; ++j) {
          if (u(j, mode) != Complex(0.0)) next += term.create(j, u(j, mode));
        }
        term = std::move(next);
      }
    }
    out += term;
  }
  out.prune(0.0);
  return out;
}

FockAmplitudeTable beam_splitter(const FockAmplitudeTable& state, const std::string& in1, const std::string& in2,
                                 double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("beam_splitter: transmittance must lie in [0, 1]");
  if (in1 == in2) throw std::invalid_argument("beam_splitter: ports must differ");
  const auto& reg = state.registry();
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(reg.size(), reg.size());
  const double st = std::sqrt(t), sr = std::sqrt(1.0 - t);
  for (auto pol : {Polarization::V, Polarization::H}) {
    const auto i1 = static_cast<Eigen::Index>(reg.index(in1, pol));
    const auto i2 = static_cast<Eigen::Index>(reg.index(in2, pol));
    u(i1, i1) = st;
    u(i2, i1) = sr;
    u(i1, i2) = sr;
    u(i2, i2) = -st;
  }
  return apply_mode_transform(state, u);
}

FockAmplitudeTable polarization_transform(const FockAmplitudeTable& state, const std::string& spatial,
                                          const Eigen::Matrix2cd& u) {
  const auto& reg = state.registry();
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Identity(reg.size(), reg.size());
  const std::array<Eigen::Index, 2> idx{static_cast<Eigen::Index>(reg.index(spatial, Polarization::V)),
                                        static_cast<Eigen::Index>(reg.index(spatial, Polarization::H))};
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) big(idx[r], idx[c]) = u(r, c);
  }
  return apply_mode_transform(state, big);
}

Postselection postselect(const FockAmplitudeTable& state, const PostselectPattern& pattern) {
  const auto& reg = state.registry();
  std::vector<std::array<std::size_t, 3>> checks;  // V index, H index, count
  for (const auto& [spatial, count] : pattern) {
    if (count < 0) throw std::invalid_argument("postselect: negative photon count");
    checks.push_back({reg.index(spatial, Polarization::V), reg.index(spatial, Polarization::H),
                      static_cast<std::size_t>(count)});
  }
  FockAmplitudeTable kept(reg, state.cutoff());
  for (const auto& [occ, a] : state.amplitudes()) {
    const bool match = std::all_of(checks.begin(), checks.end(), [&](const auto& c) {
      return static_cast<std::size_t>(occ[c[0]] + occ[c[1]]) == c[2];
    });
    if (match) kept.add(occ, a);
  }
  const double in_norm = state.norm_squared();
  const double kept_norm = kept.norm_squared();
  if (in_norm <= 0.0 || kept_norm <= 0.0) return {FockAmplitudeTable(reg, state.cutoff()), 0.0};
  kept *= 1.0 / std::sqrt(kept_norm);
  return {std::move(kept), kept_norm / in_norm};
}

QubitInput QubitInput::make(Complex alpha, Complex beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > 1e-12) {
    throw std::invalid_argument("QubitInput: amplitudes are not normalized");
  }
  return {alpha, beta};
}

QubitInput QubitInput::from_state(const StateVector& psi) {
  if (psi.dim() != 2) throw std::invalid_argument("QubitInput: state must be a qubit");
  return make(psi.amplitudes()(0), psi.amplitudes()(1));
}

std::optional<int> definite_photon_number(const FockAmplitudeTable& state, const std::string& spatial) {
  const auto& reg = state.registry();
  const auto v = reg.index(spatial, Polarization::V), h = reg.index(spatial, Polarization::H);
  std::optional<int> count;
  for (const auto& [occ, a] : state.amplitudes()) {
    if (a == Complex(0.0)) continue;
    const int n = occ[v] + occ[h];
    if (count && *count != n) return std::nullopt;
    count = n;
  }
  return count;
}

double polarization_fidelity(const FockAmplitudeTable& state, const std::string& spatial, const QubitInput& psi) {
  const auto m = definite_photon_number(state, spatial);
  if (!m) throw std::invalid_argument("polarization_fidelity: photon number in '" + spatial + "' is not definite");
  if (*m == 0) throw std::invalid_argument("polarization_fidelity: mode '" + spatial + "' is empty");
  const auto& reg = state.registry();
  FockAmplitudeTable lowered = state.annihilate(reg.index(spatial, Polarization::V), std::conj(psi.alpha));
  lowered += state.annihilate(reg.index(spatial, Polarization::H), std::conj(psi.beta));
  return lowered.norm_squared() / (*m * state.norm_squared());
}

PdcResult stimulated_pdc(int photons, const QubitInput& psi, int pairs, double tau, PdcEngine engine, int cutoff) {
  if (photons < 1) throw std::invalid_argument("stimulated_pdc: need at least one input photon");
  if (pairs < 0) throw std::invalid_argument("stimulated_pdc: negative pair number");
  const int needed = photons + 2 * pairs;
  if (cutoff < 0) cutoff = engine == PdcEngine::kExactSector ? needed : needed + 2 * default_extra_pairs(tau);
  if (cutoff < needed) throw std::invalid_argument("stimulated_pdc: cutoff below the requested sector");

  const ModeRegistry reg = ModeRegistry::signal_idler();
  const auto vs = reg.index(kSignal, Polarization::V), hs = reg.index(kSignal, Polarization::H);
  FockAmplitudeTable input = FockAmplitudeTable::vacuum(reg, cutoff);
  for (int p = 0; p < photons; ++p) {
    FockAmplitudeTable next = input.create(vs, psi.alpha);
    next += input.create(hs, psi.beta);
    input = std::move(next);
  }
  input *= 1.0 / std::sqrt(factorial(photons));

  if (engine == PdcEngine::kExactSector) {
    FockAmplitudeTable state = input;
    for (int k = 0; k < pairs; ++k) state = apply_pair_creation(state);
    const Complex pref = std::pow(std::cosh(tau), -(photons + 2)) * std::pow(Complex(0.0, -std::tanh(tau)), pairs) /
                         factorial(pairs);
    state *= pref;
    state.prune(0.0);
    return {std::move(state), 0.0};
  }

  // Dense evolution on the occupations reachable from the input by pair
  // creation, up to the cutoff.
  const auto vi = reg.index(kIdler, Polarization::V), hi = reg.index(kIdler, Polarization::H);
  std::vector<Occupation> basis;
  std::map<Occupation, Eigen::Index> lookup;
  for (const auto& [occ, a] : input.amplitudes()) {
    lookup.emplace(occ, static_cast<Eigen::Index>(basis.size()));
    basis.push_back(occ);
  }
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (total(basis[i]) + 2 > cutoff) continue;
    for (auto [s, idl] : {std::pair{vs, hi}, std::pair{hs, vi}}) {
      Occupation next = basis[i];
      ++next[s];
      ++next[idl];
      if (lookup.emplace(next, static_cast<Eigen::Index>(basis.size())).second) basis.push_back(next);
    }
  }
  const auto dim = static_cast<Eigen::Index>(basis.size());

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Occupation& occ = basis[i];
    if (total(occ) + 2 > cutoff) continue;
    auto couple = [&](std::size_t s, std::size_t idl, double sign) {
      Occupation next = occ;
      ++next[s];
      ++next[idl];
      const double amp = sign * std::sqrt(static_cast<double>(next[s]) * next[idl]);
      const Eigen::Index j = lookup.at(next);
      h(j, i) += amp;
      h(i, j) += amp;
    };
    couple(vs, hi, 1.0);
    couple(hs, vi, -1.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  Vector psi0 = Vector::Zero(dim);
  for (const auto& [occ, a] : input.amplitudes()) psi0(lookup.at(occ)) = a;
  const Matrix vecs = solver.eigenvectors().cast<Complex>();
  Vector phases(dim);
  for (Eigen::Index i = 0; i < dim; ++i) phases(i) = std::exp(Complex(0.0, -tau * solver.eigenvalues()(i)));
  const Vector evolved = vecs * phases.cwiseProduct(vecs.adjoint() * psi0);

  int top_shell = cutoff;
  if ((top_shell - photons) % 2 != 0) --top_shell;
  FockAmplitudeTable sector(reg, cutoff);
  double leakage = 0.0;
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Occupation& occ = basis[i];
    if (total(occ) == top_shell) leakage += std::norm(evolved(i));
    if (occ[vi] + occ[hi] == pairs && evolved(i) != Complex(0.0)) sector.add(occ, evolved(i));
  }
  return {std::move(sector), leakage};
}

PairFidelities scheme_1_to_11(double t, const QubitInput& psi, const SchemeOptions& opts) {
  auto state = add_spatial_mode(prepared_source(1, psi, opts), "A");
  state = beam_splitter(state, kSignal, "A", opts.split);
  state = beam_splitter(state, kSignal, kIdler, t);
  const auto post = require(state, {{"A", 1}, {kSignal, 1}, {kIdler, 1}});
  return {polarization_fidelity(post.state, "A", psi), polarization_fidelity(post.state, kSignal, psi),
          post.probability};
}

PairFidelities scheme_1_to_12(double t, Branch12 branch, const QubitInput& psi, const SchemeOptions& opts) {
  auto state = add_spatial_mode(prepared_source(2, psi, opts), "A");
  state = beam_splitter(state, kSignal, "A", opts.split);
  state = beam_splitter(state, kSignal, kIdler, t);
  const int in_a = branch == Branch12::kSingleInA ? 1 : 2;
  const auto post = require(state, {{"A", in_a}, {kSignal, 3 - in_a}, {kIdler, 2}});
  return {polarization_fidelity(post.state, "A", psi), polarization_fidelity(post.state, kSignal, psi),
          post.probability};
}

std::pair<double, double> scheme_1_to_12_closed_form(double t, Branch12 branch) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("scheme_1_to_12_closed_form: T must lie in [0, 1]");
  const double t2 = t * t;
  if (branch == Branch12::kSingleInA) {
    const double den = 12 * t2 - 12 * t + 9;
    return {(4 * t2 - 4 * t + 7) / den, (8 * t2 - 4 * t + 3) / den};
  }
  const double den = 9 * t2 - 12 * t + 12;
  return {(3 * t2 - 4 * t + 8) / den, (7 * t2 - 4 * t + 4) / den};
}

TripleFidelities scheme_1_to_111(double t1, double t2, const QubitInput& psi, const SchemeOptions& opts) {
  auto state = add_spatial_mode(add_spatial_mode(prepared_source(2, psi, opts), "A"), "C");
  state = beam_splitter(state, kSignal, "A", opts.split);
  state = beam_splitter(state, kSignal, kIdler, t1);
  const auto first = require(state, {{"A", 1}, {kSignal, 2}, {kIdler, 2}});
  state = beam_splitter(first.state, kSignal, "C", opts.split);
  state = beam_splitter(state, "C", kIdler, t2);
  const auto second = require(state, {{"A", 1}, {kSignal, 1}, {"C", 1}, {kIdler, 2}});
  return {polarization_fidelity(second.state, "A", psi), polarization_fidelity(second.state, kSignal, psi),
          polarization_fidelity(second.state, "C", psi), first.probability * second.probability};
}

}  // namespace clonebench::optics
