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

#include "clonebench/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "clonebench/asym_1n.hpp"
#include "clonebench/choi.hpp"
#include "clonebench/linalg.hpp"
#include "clonebench/pdc_optics.hpp"
#include "clonebench/symmetric.hpp"
#include "clonebench/tripartite.hpp"

namespace clonebench::sweep {
namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<const char*, 3> kFidelityColumns{"F_A", "F_B", "F_C"};
constexpr std::array<const char*, 3> kCloneNames{"A", "B", "C"};

struct MachineInfo {
  Machine machine;
  std::string_view name;
  std::vector<std::string> axes;
  double tolerance;
};

// The 1 -> 1+1+1 fit is sqrt(eps)-conditioned where a coefficient vanishes,
// hence its looser bound.
const std::vector<MachineInfo>& machine_table() {
  static const std::vector<MachineInfo> table{
      {Machine::kAsym1n, "asym1n", {"y"}, 1e-8},
      {Machine::kTripartite, "tripartite", {"alpha", "beta", "gamma"}, 1e-9},
      {Machine::kChoi, "choi", {"a", "t"}, 1e-7},
      {Machine::kPdc112, "pdc-112", {"T"}, 1e-9},
      {Machine::kPdc111, "pdc-111", {"T"}, 1e-9},
      {Machine::kPdc1111, "pdc-1111", {"T1", "T2"}, 1e-7},
  };
  return table;
}

const MachineInfo& info(Machine m) {
  for (const auto& entry : machine_table()) {
    if (entry.machine == m) return entry;
  }
  throw std::invalid_argument("sweep: unknown machine");
}

double parse_double(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("grid: cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::pair<double, double> axis_domain(Machine m) {
  if (m == Machine::kTripartite) return {0.0, 1e6};
  return {0.0, 1.0};
}

double param(const std::map<std::string, double>& params, const std::string& name, double fallback) {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

double require_param(const std::map<std::string, double>& params, const std::string& name) {
  const auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("sweep: missing parameter " + name);
  return it->second;
}

std::vector<double> etas_of(const std::vector<double>& fidelities, int d) {
  std::vector<double> out;
  out.reserve(fidelities.size());
  for (double f : fidelities) out.push_back(fidelity_to_eta(f, d));
  return out;
}

double stats_residual(const SampleStats& s, double expected) {
  return std::max(std::abs(s.min - expected), std::abs(s.max - expected));
}

TradeoffRecord eval_asym1n(const SweepConfig& c, const std::map<std::string, double>& p, std::uint64_t seed) {
  const double y = require_param(p, "y");
  const auto tp = asym1n::TradeoffParam::from_y(y);
  const auto cg = cg_projectors(c.n);
  const auto coeffs = asym1n::param_bridge(cg, tp);
  const auto numeric = asym1n::numeric_fidelities(asym1n::build_sandwich(cg, coeffs.alpha, coeffs.beta), c.samples, seed);
  const auto expected = asym1n::analytic_tradeoff(c.n, tp);
  TradeoffRecord r;
  r.params = {{"y", y}};
  r.fidelities = {numeric.a.mean, numeric.b.mean};
  r.residual = std::max({stats_residual(numeric.a, expected.a), stats_residual(numeric.b, expected.b), numeric.b_spread});
  r.etas = etas_of(r.fidelities, 2);
  return r;
}

TradeoffRecord eval_tripartite(const SweepConfig& c, const std::map<std::string, double>& p, std::uint64_t seed) {
  const double alpha = param(p, "alpha", 1.0), beta = param(p, "beta", 0.0), gamma = param(p, "gamma", 0.0);
  const auto coeffs = tripartite::make_coeffs(c.d, alpha, beta, gamma);
  const auto analytic = tripartite::fidelities_analytic(coeffs);
  const auto numeric = tripartite::fidelities_numeric(coeffs, c.samples, seed);
  TradeoffRecord r;
  r.params = {{"alpha", coeffs.alpha}, {"beta", coeffs.beta}, {"gamma", coeffs.gamma}};
  r.fidelities.assign(analytic.begin(), analytic.end());
  r.residual = numeric.norm_deviation;
  for (int x = 0; x < 3; ++x) r.residual = std::max(r.residual, stats_residual(numeric.clones[x], analytic[x]));
  r.etas = etas_of(r.fidelities, c.d);
  return r;
}

TradeoffRecord eval_choi(const SweepConfig& c, const std::map<std::string, double>& p) {
  std::array<double, 3> w = c.weights;
  if (p.contains("a") || p.contains("t")) {
    const double a = param(p, "a", 1.0 / 3), t = param(p, "t", 0.5);
    w = {a, (1.0 - a) * t, (1.0 - a) * (1.0 - t)};
  }
  const auto weights = choi::ScoreWeights::make(w[0], w[1], w[2]);
  const auto opt = choi::optimal_cloner(c.d, weights);
  const auto report = choi::verify_choi(opt.choi);
  const auto expected = tripartite::fidelities_analytic(tripartite::optimal_coeffs_for_weights(c.d, w));
  TradeoffRecord r;
  r.params = {{"a", w[0]}, {"b", w[1]}, {"c", w[2]}};
  r.fidelities.assign(opt.fidelities.begin(), opt.fidelities.end());
  r.residual = std::max({std::abs(opt.achieved - opt.bound), report.tp_residual, report.psd_residual});
  // A zero-weight clone is unconstrained on a degenerate top eigenspace.
  for (int x = 0; x < 3; ++x) {
    if (w[x] > 0.0) r.residual = std::max(r.residual, std::abs(opt.fidelities[x] - expected[x]));
  }
  r.etas = etas_of(r.fidelities, c.d);
  return r;
}

optics::QubitInput random_qubit(std::uint64_t seed) {
  return optics::QubitInput::from_state(haar_random_state(2, seed));
}

std::vector<TradeoffRecord> eval_pdc112(const std::map<std::string, double>& p, std::uint64_t seed) {
  const double t = require_param(p, "T");
  const auto psi = random_qubit(seed);
  std::vector<TradeoffRecord> out;
  for (auto branch : {optics::Branch12::kSingleInA, optics::Branch12::kPairInA}) {
    const auto sim = optics::scheme_1_to_12(t, branch, psi);
    const auto closed = optics::scheme_1_to_12_closed_form(t, branch);
    TradeoffRecord r;
    r.params = {{"T", t}};
    r.branch = branch == optics::Branch12::kSingleInA ? 1 : 2;
    r.fidelities = {sim.f_a, sim.f_b};
    r.probability = sim.probability;
    r.residual = std::max(std::abs(sim.f_a - closed.first), std::abs(sim.f_b - closed.second));
    r.etas = etas_of(r.fidelities, 2);
    out.push_back(std::move(r));
  }
  return out;
}

// Two-clone qubit frontier alpha^2 + beta^2 + alpha beta = 1 with
// F^A = 1 - beta^2 / 2 and F^B = 1 - alpha^2 / 2, solved from F^B, which stays
// well conditioned up to the perfect-clone end.
double two_clone_frontier_fa(double fb) {
  const double alpha = std::sqrt(std::max(0.0, 2.0 * (1.0 - fb)));
  const double beta = 0.5 * (-alpha + std::sqrt(std::max(0.0, 4.0 - 3.0 * alpha * alpha)));
  return 1.0 - 0.5 * beta * beta;
}

TradeoffRecord eval_pdc111(const std::map<std::string, double>& p, std::uint64_t seed) {
  const double t = require_param(p, "T");
  const auto sim = optics::scheme_1_to_11(t, random_qubit(seed));
  TradeoffRecord r;
  r.params = {{"T", t}};
  r.fidelities = {sim.f_a, sim.f_b};
  r.probability = sim.probability;
  r.residual = std::abs(sim.f_a - two_clone_frontier_fa(sim.f_b));
  r.etas = etas_of(r.fidelities, 2);
  return r;
}

TradeoffRecord eval_pdc1111(const std::map<std::string, double>& p, std::uint64_t seed) {
  const double t1 = require_param(p, "T1"), t2 = require_param(p, "T2");
  const auto sim = optics::scheme_1_to_111(t1, t2, random_qubit(seed));
  const auto fit = tripartite::fit_coefficients(2, {sim.f_a, sim.f_b, sim.f_c});
  TradeoffRecord r;
  r.params = {{"T1", t1}, {"T2", t2}};
  r.fidelities = {sim.f_a, sim.f_b, sim.f_c};
  r.probability = sim.probability;
  r.residual = std::max(fit.fidelity_residual, std::abs(fit.constraint_residual));
  r.etas = etas_of(r.fidelities, 2);
  return r;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string_view machine_name(Machine m) { return info(m).name; }

Machine parse_machine(std::string_view name) {
  for (const auto& entry : machine_table()) {
    if (entry.name == name) return entry.machine;
  }
  throw std::invalid_argument("unknown machine '" + std::string(name) +
                              "' (asym1n, tripartite, choi, pdc-112, pdc-111, pdc-1111)");
}

std::vector<std::string> machine_axes(Machine m) { return info(m).axes; }

double default_tolerance(Machine m) { return info(m).tolerance; }

double GridAxis::value(int i) const {
  if (i == points - 1) return stop;
  return start + (stop - start) * i / (points - 1);
}

GridAxis GridAxis::parse(std::string_view spec) {
  const auto eq = spec.find('=');
  if (eq == std::string_view::npos || eq == 0) throw std::invalid_argument("grid: expected name=start:stop:points");
  const auto range = spec.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : range.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("grid: expected name=start:stop:points");
  GridAxis axis;
  axis.name = std::string(spec.substr(0, eq));
  axis.start = parse_double(range.substr(0, c1), "start");
  axis.stop = parse_double(range.substr(c1 + 1, c2 - c1 - 1), "stop");
  const double points = parse_double(range.substr(c2 + 1), "points");
  if (points != std::floor(points) || points < 2 || points > 1e6) {
    throw std::invalid_argument("grid: points must be an integer >= 2");
  }
  axis.points = static_cast<int>(points);
  if (axis.stop < axis.start) throw std::invalid_argument("grid: stop must not be below start");
  return axis;
}

std::vector<GridAxis> default_grid(Machine m) {
  switch (m) {
    case Machine::kAsym1n:
      return {{"y", 0.0, 1.0, 50}};
    case Machine::kTripartite:
      return {{"beta", 0.0, 1.0, 21}};
    case Machine::kChoi:
      return {{"a", 0.1, 0.9, 5}, {"t", 0.1, 0.9, 3}};
    case Machine::kPdc112:
    case Machine::kPdc111:
      return {{"T", 0.5, 1.0, 50}};
    case Machine::kPdc1111:
      return {{"T1", 0.5, 1.0, 11}, {"T2", 0.5, 1.0, 11}};
  }
  throw std::invalid_argument("sweep: unknown machine");
}

void validate(const SweepConfig& config) {
  if (config.d < 2 || config.d > 6) throw std::invalid_argument("sweep: d must be in [2, 6]");
  if (config.n < 2 || config.n > 6) throw std::invalid_argument("sweep: n must be in [2, 6]");
  if (config.jobs < 1) throw std::invalid_argument("sweep: jobs must be positive");
  if (config.samples < 1) throw std::invalid_argument("sweep: samples must be positive");
  if (config.tolerance && !(*config.tolerance >= 0.0)) throw std::invalid_argument("sweep: tolerance must be >= 0");
  if (config.machine == Machine::kChoi && config.d > 3) {
    throw std::invalid_argument("sweep: choi supports d = 2 or 3");
  }
  const auto axes = machine_axes(config.machine);
  std::vector<std::string> seen;
  for (const auto& axis : config.grid) {
    if (std::find(axes.begin(), axes.end(), axis.name) == axes.end()) {
      throw std::invalid_argument("sweep: machine " + std::string(machine_name(config.machine)) +
                                  " has no parameter '" + axis.name + "'");
    }
    if (std::find(seen.begin(), seen.end(), axis.name) != seen.end()) {
      throw std::invalid_argument("sweep: duplicated grid axis " + axis.name);
    }
    seen.push_back(axis.name);
    const auto [lo, hi] = axis_domain(config.machine);
    if (axis.points < 2) throw std::invalid_argument("sweep: grid needs at least 2 points");
    if (axis.start < lo || axis.stop > hi || axis.stop < axis.start) {
      throw std::invalid_argument("sweep: grid for " + axis.name + " leaves [" + format_double(lo) + ", " +
                                  format_double(hi) + "]");
    }
  }
}

std::vector<TradeoffRecord> evaluate_point(const SweepConfig& config, const std::map<std::string, double>& params,
                                           std::uint64_t seed) {
  const auto axes = machine_axes(config.machine);
  for (const auto& [name, value] : params) {
    if (std::find(axes.begin(), axes.end(), name) == axes.end()) {
      throw std::invalid_argument("point: machine " + std::string(machine_name(config.machine)) +
                                  " has no parameter '" + name + "'");
    }
    const auto [lo, hi] = axis_domain(config.machine);
    if (!(value >= lo && value <= hi)) throw std::invalid_argument("point: " + name + " out of range");
  }
  std::vector<TradeoffRecord> out;
  switch (config.machine) {
    case Machine::kAsym1n:
      out.push_back(eval_asym1n(config, params, seed));
      break;
    case Machine::kTripartite:
      out.push_back(eval_tripartite(config, params, seed));
      break;
    case Machine::kChoi:
      out.push_back(eval_choi(config, params));
      break;
    case Machine::kPdc112:
      out = eval_pdc112(params, seed);
      break;
    case Machine::kPdc111:
      out.push_back(eval_pdc111(params, seed));
      break;
    case Machine::kPdc1111:
      out.push_back(eval_pdc1111(params, seed));
      break;
  }
  for (auto& r : out) r.machine = config.machine;
  return out;
}

SweepSummary summarize_records(const std::vector<TradeoffRecord>& records, double tolerance) {
  SweepSummary s;
  s.records = records.size();
  s.tolerance = tolerance;
  for (const auto& r : records) s.max_residual = std::max(s.max_residual, r.residual);
  s.passed = s.max_residual <= tolerance;
  return s;
}

SweepResult run_sweep(const SweepConfig& config) {
  validate(config);
  const auto grid = config.grid.empty() ? default_grid(config.machine) : config.grid;
  std::size_t total = 1;
  for (const auto& axis : grid) total *= static_cast<std::size_t>(axis.points);

  auto point_params = [&](std::size_t index) {
    std::map<std::string, double> params;
    for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
      const auto pts = static_cast<std::size_t>(it->points);
      params[it->name] = it->value(static_cast<int>(index % pts));
      index /= pts;
    }
    return params;
  };

  std::vector<std::vector<TradeoffRecord>> slots(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        slots[i] = evaluate_point(config, point_params(i), derive_seed(config.seed, i));
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };
  const int jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(config.jobs), total));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  for (auto& slot : slots) {
    for (auto& r : slot) result.records.push_back(std::move(r));
  }
  result.summary = summarize_records(result.records, config.tolerance.value_or(default_tolerance(config.machine)));
  return result;
}

std::vector<TradeoffRecord> frontier(Machine m, int n, int d, int points) {
  if (points < 2) throw std::invalid_argument("frontier: points must be >= 2");
  std::vector<TradeoffRecord> out;
  if (m == Machine::kAsym1n) {
    if (n < 2) throw std::invalid_argument("frontier: n must be >= 2");
    const GridAxis axis{"y", 0.0, asym1n::symmetric_optimum_y(n), points};
    for (int i = 0; i < points; ++i) {
      const double y = axis.value(i);
      const auto f = asym1n::analytic_tradeoff(n, asym1n::TradeoffParam::from_y(y));
      TradeoffRecord r;
      r.machine = m;
      r.params = {{"y", y}};
      r.fidelities = {f.a, f.b};
      r.etas = etas_of(r.fidelities, 2);
      out.push_back(std::move(r));
    }
    return out;
  }
  if (m == Machine::kTripartite || m == Machine::kChoi) {
    if (d < 2) throw std::invalid_argument("frontier: d must be >= 2");
    const GridAxis axis{"t", 0.0, 1.0, points};
    for (int i = 0; i < points; ++i) {
      const double t = axis.value(i);
      const auto c = tripartite::optimal_coeffs_for_weights(d, {t, 1.0 - t, 0.0});
      const auto f = tripartite::fidelities_analytic(c);
      TradeoffRecord r;
      r.machine = m;
      r.params = {{"t", t}, {"alpha", c.alpha}, {"beta", c.beta}, {"gamma", c.gamma}};
      r.fidelities = {f[0], f[1]};
      r.etas = etas_of(r.fidelities, d);
      out.push_back(std::move(r));
    }
    return out;
  }
  throw std::invalid_argument("frontier: available for asym1n, tripartite and choi");
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "jsonl") return Format::kJsonl;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (csv, jsonl)");
}

std::string csv_header(const TradeoffRecord& r) {
  std::string h;
  for (const auto& [name, value] : r.params) h += name + ",";
  if (r.branch) h += "branch,";
  for (std::size_t x = 0; x < r.fidelities.size(); ++x) h += std::string(kFidelityColumns[x]) + ",";
  if (r.probability) h += "prob,";
  return h + "residual";
}

void write_records(std::ostream& out, const std::vector<TradeoffRecord>& records, Format format) {
  if (format == Format::kCsv) {
    if (records.empty()) return;
    out << csv_header(records.front()) << '\n';
    for (const auto& r : records) {
      for (const auto& [name, value] : r.params) out << format_double(value) << ',';
      if (r.branch) out << *r.branch << ',';
      for (double f : r.fidelities) out << format_double(f) << ',';
      if (r.probability) out << format_double(*r.probability) << ',';
      out << format_double(r.residual) << '\n';
    }
    return;
  }
  for (const auto& r : records) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["machine"] = machine_name(r.machine);
    Json params = Json::object();
    for (const auto& [name, value] : r.params) params[name] = value;
    j["params"] = params;
    if (r.branch) j["branch"] = *r.branch;
    Json fid = Json::object(), eta = Json::object();
    for (std::size_t x = 0; x < r.fidelities.size(); ++x) {
      fid[kFidelityColumns[x]] = r.fidelities[x];
      eta[kCloneNames[x]] = r.etas.at(x);
    }
    j["fidelities"] = fid;
    j["eta"] = eta;
    if (r.probability) j["prob"] = *r.probability;
    j["residual"] = r.residual;
    out << j.dump() << '\n';
  }
}

std::string summary_json(const SweepSummary& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["records"] = s.records;
  j["max_residual"] = s.max_residual;
  j["tolerance"] = s.tolerance;
  j["passed"] = s.passed;
  return j.dump();
}

}  // namespace clonebench::sweep
