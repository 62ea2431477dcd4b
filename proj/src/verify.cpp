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

#include "clonebench/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "clonebench/asym_1n.hpp"
#include "clonebench/choi.hpp"
#include "clonebench/linalg.hpp"
#include "clonebench/pdc_optics.hpp"
#include "clonebench/sweep.hpp"
#include "clonebench/tripartite.hpp"

namespace clonebench::verify {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kUniversalityInputs = 30;
constexpr int kHaarSamples = 100000;

// Collects checks for one criterion, applying the negative-control offset.
class Recorder {
 public:
  Recorder(CriterionResult& out, double offset) : out_(out), offset_(offset) {}

  void value(std::string name, double expected, double computed, double tolerance) {
    computed += offset_;
    const double residual = std::abs(computed - expected);
    out_.checks.push_back({std::move(name), expected, computed, residual, tolerance, residual <= tolerance});
  }

  /// A residual that should vanish.
  void residual(std::string name, double r, double tolerance) { value(std::move(name), 0.0, r, tolerance); }

  double shift() const { return offset_; }

  /// A quantity that must stay below a bound (variances, z-scores).
  void bound(std::string name, double computed, double limit) {
    computed += offset_;
    out_.checks.push_back({std::move(name), limit, computed, computed, limit, computed <= limit});
  }

 private:
  CriterionResult& out_;
  double offset_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os << std::fixed;
  os.precision(2);
  os << s;
  return os.str();
}

sweep::SweepResult sweep_of(sweep::Machine m, std::vector<sweep::GridAxis> grid, const VerifyOptions& o, int n = 2,
                            int d = 2, int samples = 8) {
  sweep::SweepConfig c;
  c.machine = m;
  c.grid = std::move(grid);
  c.n = n;
  c.d = d;
  c.seed = o.seed;
  c.jobs = o.jobs;
  c.samples = samples;
  return sweep::run_sweep(c);
}

std::vector<optics::QubitInput> haar_qubits(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<optics::QubitInput> out;
  for (int i = 0; i < count; ++i) out.push_back(optics::QubitInput::from_state(haar_random_state(2, rng)));
  return out;
}

double variance(const std::vector<double>& v) {
  const auto s = summarize(v);
  return s.stddev * s.stddev;
}

void criterion_1(Recorder& r) {
  const auto end = asym1n::analytic_tradeoff(2, asym1n::TradeoffParam::from_y(0.0));
  r.value("n=2 y=0 F^A", 1.0, end.a, 0.0);
  r.value("n=2 y=0 F^B", 0.5, end.b, 0.0);
  const auto peak = asym1n::analytic_tradeoff(2, asym1n::TradeoffParam::from_y(asym1n::symmetric_optimum_y(2)));
  r.value("n=2 F^B at its maximum", 5.0 / 6.0, peak.b, 1e-12);
  r.value("n=2 F^A where F^B = 5/6", 5.0 / 9.0, peak.a, 1e-12);
}

void criterion_2(Recorder& r) {
  const double y = std::sqrt(0.5);
  const auto f = asym1n::estimation_limit(y);
  r.value("F_meas at y = 1/sqrt(2)", 2.0 / 3.0, f.b, 1e-12);
  r.value("F^A at y = 1/sqrt(2)", 2.0 / 3.0, f.a, 1e-12);
  constexpr int kScan = 10001;
  double best = 0.0, best_y = 0.0;
  for (int i = 0; i < kScan; ++i) {
    const double yi = y * i / (kScan - 1);
    const double fm = asym1n::estimation_limit(yi).b;
    if (fm > best) best = fm, best_y = yi;
  }
  r.value("max F_meas over y in [0, 1/sqrt(2)]", 2.0 / 3.0, best, 1e-12);
  r.value("argmax y", y, best_y, 1e-12);
}

void criterion_3(Recorder& r, const VerifyOptions& o) {
  for (int n : {2, 3, 4}) {
    const auto s = sweep_of(sweep::Machine::kAsym1n, {{"y", 0.0, 1.0, 50}}, o, n);
    r.residual("n=" + std::to_string(n) + " max |numeric - analytic| over 50 y", s.summary.max_residual, 1e-8);
  }
}

void criterion_4(Recorder& r, const VerifyOptions& o) {
  for (int d : {2, 3, 5}) {
    // Two-clone frontier: alpha^2 + beta^2 + (2/d) alpha beta = 1,
    // F^A = 1 - (d-1)/d beta^2, F^B = 1 - (d-1)/d alpha^2.
    double worst_analytic = 0.0, worst_numeric = 0.0;
    for (int i = 0; i <= 20; ++i) {
      const double theta = 0.5 * std::numbers::pi * i / 20.0;
      const double ca = std::cos(theta), cb = std::sin(theta);
      const double scale = 1.0 / std::sqrt(ca * ca + cb * cb + 2.0 * ca * cb / d);
      const double alpha = ca * scale, beta = cb * scale;
      const double k = (d - 1.0) / d;
      const std::array<double, 3> expected{1.0 - k * beta * beta, 1.0 - k * alpha * alpha, 1.0 / d};
      const auto c = tripartite::make_coeffs(d, ca, cb, 0.0);
      const auto analytic = tripartite::fidelities_analytic(c);
      const auto numeric = tripartite::fidelities_numeric(c, 4, derive_seed(o.seed, 100 * d + i));
      for (int x = 0; x < 2; ++x) {
        worst_analytic = std::max(worst_analytic, std::abs(analytic[x] - expected[x]));
        worst_numeric = std::max({worst_numeric, std::abs(numeric.clones[x].min - expected[x]),
                                  std::abs(numeric.clones[x].max - expected[x])});
      }
    }
    const std::string tag = "d=" + std::to_string(d) + " gamma=0 ";
    r.residual(tag + "closed form vs two-clone frontier", worst_analytic, 1e-12);
    r.residual(tag + "partial trace vs two-clone frontier", worst_numeric, 1e-12);
  }
  const auto sym = tripartite::fidelities_analytic(tripartite::make_coeffs(2, 1.0, 1.0, 1.0));
  const auto sym_num = tripartite::fidelities_numeric(tripartite::make_coeffs(2, 1.0, 1.0, 1.0), 8, o.seed);
  for (int x = 0; x < 3; ++x) {
    r.value(std::string("d=2 symmetric F^") + "ABC"[x], 7.0 / 9.0, sym[x], 1e-12);
    r.value(std::string("d=2 symmetric F^") + "ABC"[x] + " (partial trace)", 7.0 / 9.0, sym_num.clones[x].mean, 1e-12);
  }
  // "Exactly": compared at the double-precision rounding level.
  for (int d : {2, 3, 5}) {
    const auto f = tripartite::fidelities_analytic(tripartite::make_coeffs(d, 1.0, 0.0, 0.0));
    const std::string tag = "d=" + std::to_string(d) + " alpha=1 ";
    r.value(tag + "F^A", 1.0, f[0], 1e-15);
    r.value(tag + "F^B", 1.0 / d, f[1], 1e-15);
    r.value(tag + "F^C", 1.0 / d, f[2], 1e-15);
  }
}

const std::vector<std::array<double, 3>>& weight_grid() {
  static const std::vector<std::array<double, 3>> grid{
      {1, 0, 0},          {0, 1, 0},           {0, 0, 1},          {1.0 / 3, 1.0 / 3, 1.0 / 3},
      {0.5, 0.3, 0.2},    {0.6, 0.2, 0.2},     {0.7, 0.2, 0.1},    {0.1, 0.1, 0.8},
      {0.2, 0.5, 0.3},    {0.4, 0.4, 0.2},     {0.25, 0.25, 0.5},  {0.15, 0.6, 0.25}};
  return grid;
}

void criterion_5(Recorder& r) {
  for (int d : {2, 3}) {
    double saturation = 0.0, tp = 0.0, match = 0.0;
    for (const auto& w : weight_grid()) {
      const auto opt = choi::optimal_cloner(d, choi::ScoreWeights::make(w[0], w[1], w[2]));
      saturation = std::max(saturation, std::abs(opt.achieved - opt.bound));
      tp = std::max(tp, choi::verify_choi(opt.choi).tp_residual);
      const auto expected = tripartite::fidelities_analytic(tripartite::optimal_coeffs_for_weights(d, w));
      for (int x = 0; x < 3; ++x) match = std::max(match, std::abs(opt.fidelities[x] - expected[x]));
    }
    const std::string tag = "d=" + std::to_string(d) + " 12 weights ";
    r.residual(tag + "|Tr[S L] - d lambda_max|", saturation, 1e-8);
    r.bound(tag + "trace-preservation residual", tp, 1e-9);
    r.residual(tag + "fidelities vs optimal coefficient family", match, 1e-7);
  }
}

void criterion_6(Recorder& r, const VerifyOptions& o) {
  for (int d : {2, 3}) {
    Rng rng(derive_seed(o.seed, 600 + d));
    const Eigen::Index n = Eigen::Index{d} * d;
    Matrix sum = Matrix::Zero(n, n);
    Eigen::MatrixXd sq_re = Eigen::MatrixXd::Zero(n, n), sq_im = Eigen::MatrixXd::Zero(n, n);
    for (int s = 0; s < kHaarSamples; ++s) {
      const Vector psi = haar_random_state(d, rng).amplitudes();
      const Matrix proj = psi * psi.adjoint();
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          // conj(psi) psi^T (x) psi psi^dagger, block (i, j) = proj(j, i) proj.
          const Matrix block = proj(j, i) * proj;
          sum.block(i * d, j * d, d, d) += block;
          sq_re.block(i * d, j * d, d, d) += block.real().cwiseAbs2();
          sq_im.block(i * d, j * d, d, d) += block.imag().cwiseAbs2();
        }
      }
    }
    const Matrix mean = (sum / kHaarSamples).array() + Complex(r.shift());
    const Matrix closed = choi::haar_pair_operator(d).matrix();
    double worst = 0.0;
    auto z = [](double diff, double second_moment, double m) {
      const double se = std::sqrt(std::max(second_moment / kHaarSamples - m * m, 0.0) / kHaarSamples);
      // Entries that are constant over the samples must match exactly.
      return se > 0.0 ? std::abs(diff) / se : (std::abs(diff) <= 1e-15 ? 0.0 : std::numeric_limits<double>::infinity());
    };
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        const Complex diff = mean(i, j) - closed(i, j);
        worst = std::max({worst, z(diff.real(), sq_re(i, j), mean(i, j).real()),
                          z(diff.imag(), sq_im(i, j), mean(i, j).imag())});
      }
    }
    r.bound("d=" + std::to_string(d) + " max entrywise |MC - closed| / SE (1e5 samples)", worst, 3.0);
  }
}

void criterion_7(Recorder& r, const VerifyOptions& o) {
  const auto s = sweep_of(sweep::Machine::kPdc112, {{"T", 0.5, 1.0, 50}}, o);
  double worst[2] = {0.0, 0.0};
  for (const auto& rec : s.records) worst[*rec.branch - 1] = std::max(worst[*rec.branch - 1], rec.residual);
  r.residual("single photon in A, 50 T vs closed form", worst[0], 1e-9);
  r.residual("photon pair in A, 50 T vs closed form", worst[1], 1e-9);
  const auto psi = haar_qubits(derive_seed(o.seed, 7), 1).front();
  const auto sym = optics::scheme_1_to_12(1.0, optics::Branch12::kSingleInA, psi);
  r.value("T=1 F^A", 7.0 / 9.0, sym.f_a, 1e-9);
  r.value("T=1 F^B", 7.0 / 9.0, sym.f_b, 1e-9);
  const auto perfect = optics::scheme_1_to_12(0.5, optics::Branch12::kSingleInA, psi);
  r.value("T=1/2 F^A", 1.0, perfect.f_a, 1e-9);
  r.value("T=1/2 F^B", 0.5, perfect.f_b, 1e-9);
  const auto pair = optics::scheme_1_to_12(2.0 / 3.0, optics::Branch12::kPairInA, psi);
  r.value("T=2/3 larger of the pair", 5.0 / 6.0, std::max(pair.f_a, pair.f_b), 1e-9);
  r.value("T=2/3 smaller of the pair", 5.0 / 9.0, std::min(pair.f_a, pair.f_b), 1e-9);
}

void criterion_8(Recorder& r, const VerifyOptions& o) {
  const auto s = sweep_of(sweep::Machine::kPdc112, {{"T", 0.5, 1.0, 50}}, o);
  double worst[2] = {0.0, 0.0};
  for (const auto& rec : s.records) {
    // The single-photon arm plays the lone clone of the 1 -> 1+2 frontier.
    const bool single_in_a = *rec.branch == 1;
    const asym1n::FidelityPair f{single_in_a ? rec.fidelities[0] : rec.fidelities[1],
                                 single_in_a ? rec.fidelities[1] : rec.fidelities[0]};
    worst[*rec.branch - 1] = std::max(worst[*rec.branch - 1], asym1n::frontier_residual(2, f));
  }
  r.residual("single photon in A: distance to n=2 frontier", worst[0], 1e-9);
  r.residual("photon pair in A: distance to n=2 frontier", worst[1], 1e-9);
}

void criterion_9(Recorder& r, const VerifyOptions& o) {
  const auto psi = haar_qubits(derive_seed(o.seed, 9), 1).front();
  const auto sym = optics::scheme_1_to_111(1.0, 1.0, psi);
  r.value("T1=T2=1 F^A", 7.0 / 9.0, sym.f_a, 1e-9);
  r.value("T1=T2=1 F^B", 7.0 / 9.0, sym.f_b, 1e-9);
  r.value("T1=T2=1 F^C", 7.0 / 9.0, sym.f_c, 1e-9);
  for (double t2 : {0.5, 0.75, 1.0}) {
    const auto f = optics::scheme_1_to_111(0.5, t2, psi);
    const std::string tag = "T1=1/2 T2=" + fmt(t2) + " ";
    r.value(tag + "F^A", 1.0, f.f_a, 1e-9);
    r.value(tag + "F^B", 0.5, f.f_b, 1e-9);
    r.value(tag + "F^C", 0.5, f.f_c, 1e-9);
  }
  double worst = 0.0;
  const sweep::GridAxis axis{"T1", 0.5, 1.0, 50};
  for (int i = 0; i < axis.points; ++i) {
    const double t1 = axis.value(i);
    const auto f = optics::scheme_1_to_111(t1, 1.0, psi);
    const auto closed = optics::scheme_1_to_12_closed_form(t1, optics::Branch12::kSingleInA);
    worst = std::max({worst, std::abs(f.f_a - closed.first), std::abs(f.f_b - closed.second),
                      std::abs(f.f_c - closed.second)});
  }
  r.residual("T2=1, 50 T1 vs 1 -> 1+2 closed form", worst, 1e-9);
}

void criterion_10(Recorder& r, const VerifyOptions& o) {
  // Universality of every machine.
  {
    const auto coeffs = asym1n::param_bridge(2, asym1n::TradeoffParam::from_y(0.4));
    const auto f = asym1n::numeric_fidelities(asym1n::build_sandwich(2, coeffs.alpha, coeffs.beta),
                                              kUniversalityInputs, derive_seed(o.seed, 1001));
    r.bound("asym1n fidelity variance", std::max(f.a.stddev * f.a.stddev, f.b.stddev * f.b.stddev), 1e-16);
  }
  {
    const auto f = tripartite::fidelities_numeric(tripartite::make_coeffs(3, 0.8, 0.5, 0.3), kUniversalityInputs,
                                                  derive_seed(o.seed, 1002));
    double v = 0.0;
    for (const auto& c : f.clones) v = std::max(v, c.stddev * c.stddev);
    r.bound("tripartite fidelity variance", v, 1e-16);
  }
  const auto opt = choi::optimal_cloner(2, choi::ScoreWeights::make(0.5, 0.3, 0.2));
  {
    Rng rng(derive_seed(o.seed, 1003));
    std::array<std::vector<double>, 3> fids;
    double two_route = 0.0;
    for (int i = 0; i < kUniversalityInputs; ++i) {
      const auto psi = haar_random_state(2, rng, choi::kInputLabel);
      const auto out = choi::apply_choi(opt.choi, DensityOperator::pure(psi));
      for (int x = 0; x < 3; ++x) {
        const double f = fidelity_pure(partial_trace(out, {choi::kCloneLabels[x]}), psi);
        fids[x].push_back(f);
        two_route = std::max(two_route, std::abs(f - opt.fidelities[x]));
      }
    }
    double v = 0.0;
    for (const auto& f : fids) v = std::max(v, variance(f));
    r.bound("choi fidelity variance", v, 1e-16);
    r.residual("two-route |Tr[S L_X] - <psi|rho_X|psi>|", two_route, 1e-9);
  }
  {
    const auto inputs = haar_qubits(derive_seed(o.seed, 1004), kUniversalityInputs);
    std::vector<double> a112, b112, a11, b11, a111, b111, c111;
    for (const auto& psi : inputs) {
      const auto p = optics::scheme_1_to_12(0.7, optics::Branch12::kSingleInA, psi);
      a112.push_back(p.f_a);
      b112.push_back(p.f_b);
      const auto q = optics::scheme_1_to_11(0.7, psi);
      a11.push_back(q.f_a);
      b11.push_back(q.f_b);
      const auto t = optics::scheme_1_to_111(0.8, 0.6, psi);
      a111.push_back(t.f_a);
      b111.push_back(t.f_b);
      c111.push_back(t.f_c);
    }
    r.bound("pdc-112 fidelity variance", std::max(variance(a112), variance(b112)), 1e-16);
    r.bound("pdc-111 fidelity variance", std::max(variance(a11), variance(b11)), 1e-16);
    r.bound("pdc-1111 fidelity variance", std::max({variance(a111), variance(b111), variance(c111)}), 1e-16);
  }
  // Beam-splitter unitarity and postselection completeness.
  {
    const auto psi = haar_qubits(derive_seed(o.seed, 1005), 1).front();
    auto state = optics::add_spatial_mode(optics::stimulated_pdc(2, psi, 2, 0.3, optics::PdcEngine::kExactSector).state, "A");
    const double before = state.norm_squared();
    Rng rng(derive_seed(o.seed, 1006));
    double drift = 0.0;
    for (int i = 0; i < 10; ++i) {
      state = optics::beam_splitter(state, i % 2 ? "S" : "A", "I", rng.uniform());
      drift = std::max(drift, std::abs(state.norm_squared() - before) / before);
    }
    r.residual("beam splitter relative norm drift", drift, 1e-12);
    double total = 0.0;
    const int photons = 2 + 2 * 2;
    for (int a = 0; a <= photons; ++a) {
      for (int s = 0; a + s <= photons; ++s) total += optics::postselect(state, {{"A", a}, {"S", s}}).probability;
    }
    r.value("postselection probabilities over (A, S) counts", 1.0, total, 1e-10);
  }
  // Exact sector vs matrix exponential.
  {
    const auto psi = haar_qubits(derive_seed(o.seed, 1007), 1).front();
    double worst = 0.0;
    for (double tau : {0.05, 0.1, 0.2}) {
      for (int k = 0; k <= 2; ++k) {
        const auto exact = optics::stimulated_pdc(1, psi, k, tau, optics::PdcEngine::kExactSector).state;
        const auto dense = optics::stimulated_pdc(1, psi, k, tau, optics::PdcEngine::kExponential).state;
        for (const auto& [occ, a] : exact.amplitudes()) worst = std::max(worst, std::abs(dense.amplitude(occ) - a));
        for (const auto& [occ, a] : dense.amplitudes()) worst = std::max(worst, std::abs(exact.amplitude(occ) - a));
      }
    }
    r.residual("exact sector vs exponential, tau <= 0.2", worst, 1e-6);
  }
}

const std::array<const char*, kCriteria> kTitles{
    "1 -> 1+n closed-form endpoints (n = 2)",
    "measurement limit maximum",
    "sandwich map vs closed form, n = 2, 3, 4",
    "tripartite reductions",
    "Choi optimizer saturation",
    "Haar kernel vs Monte Carlo",
    "optical 1 -> 1+2 closed forms and quoted points",
    "optical 1 -> 1+2 on the optimal frontier",
    "optical 1 -> 1+1+1 limits",
    "property suites",
};

}  // namespace

bool CriterionResult::passed() const {
  return error.empty() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

bool VerifyReport::passed() const {
  return !criteria.empty() && std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed(); });
}

std::vector<int> VerifyReport::failed_ids() const {
  std::vector<int> out;
  for (const auto& c : criteria) {
    if (!c.passed()) out.push_back(c.id);
  }
  return out;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  if (id < 1 || id > kCriteria) throw std::invalid_argument("run_criterion: id must be in 1..10");
  CriterionResult result;
  result.id = id;
  result.title = kTitles[id - 1];
  Recorder r(result, options.perturb_criterion == id ? options.perturb_offset : 0.0);
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: criterion_1(r); break;
      case 2: criterion_2(r); break;
      case 3: criterion_3(r, options); break;
      case 4: criterion_4(r, options); break;
      case 5: criterion_5(r); break;
      case 6: criterion_6(r, options); break;
      case 7: criterion_7(r, options); break;
      case 8: criterion_8(r, options); break;
      case 9: criterion_9(r, options); break;
      default: criterion_10(r, options); break;
    }
  } catch (const std::exception& e) {
    result.error = e.what();
  }
  result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

VerifyReport verify_all(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  const auto start = Clock::now();
  for (int id = 1; id <= kCriteria; ++id) report.criteria.push_back(run_criterion(id, options));
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& c : criteria) {
    os << "criterion " << c.id << ": " << (c.passed() ? "PASS" : "FAIL") << "  " << c.title << "  ("
       << seconds_text(c.seconds) << " s)\n";
    if (!c.error.empty()) os << "    error: " << c.error << '\n';
    for (const auto& k : c.checks) {
      os << "    [" << (k.passed ? "ok" : "FAIL") << "] " << k.name << ": computed " << fmt(k.computed) << ", expected "
         << fmt(k.expected) << ", residual " << fmt(k.residual) << ", tolerance " << fmt(k.tolerance) << '\n';
    }
  }
  os << (passed() ? "all criteria passed" : "FAILED criteria:");
  for (int id : failed_ids()) os << ' ' << id;
  os << "  (seed " << seed << ", " << seconds_text(seconds) << " s)\n";
  return os.str();
}

std::string VerifyReport::json() const {
  nlohmann::ordered_json j;
  j["schema"] = sweep::kSchemaVersion;
  j["seed"] = seed;
  j["passed"] = passed();
  j["failed"] = failed_ids();
  j["seconds"] = seconds;
  auto& list = j["criteria"] = nlohmann::ordered_json::array();
  for (const auto& c : criteria) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["title"] = c.title;
    e["passed"] = c.passed();
    e["seconds"] = c.seconds;
    if (!c.error.empty()) e["error"] = c.error;
    auto& checks = e["checks"] = nlohmann::ordered_json::array();
    for (const auto& k : c.checks) {
      checks.push_back({{"name", k.name},
                        {"computed", k.computed},
                        {"expected", k.expected},
                        {"residual", k.residual},
                        {"tolerance", k.tolerance},
                        {"passed", k.passed}});
    }
    list.push_back(std::move(e));
  }
  return j.dump(2);
}

}  // namespace clonebench::verify
