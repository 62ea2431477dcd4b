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

// clonebench: sweeps, single points, optimal frontiers and the acceptance run.
//
// Exit codes: 0 success, 1 acceptance or tolerance failure, 2 usage error.

#include <array>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "clonebench/sweep.hpp"
#include "clonebench/verify.hpp"

namespace {

namespace sw = clonebench::sweep;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raw flag values; std::nullopt means "not given" so config files can fill in.
struct MachineFlags {
  std::string config_path;
  std::optional<std::string> machine;
  std::optional<int> d;
  std::optional<int> n;
  std::vector<std::string> grid;
  std::optional<std::string> weights;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<int> jobs;
  std::optional<double> tolerance;
  std::optional<int> samples;
};

struct Resolved {
  sw::SweepConfig config;
  std::string out;
  sw::Format format = sw::Format::kCsv;
};

std::array<double, 3> parse_weights(const std::string& text) {
  std::array<double, 3> w{};
  std::istringstream is(text);
  std::string item;
  int i = 0;
  while (std::getline(is, item, ',')) {
    if (i == 3) throw UsageError("--weights expects a,b,c");
    try {
      std::size_t used = 0;
      w[i] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--weights: cannot parse '" + item + "'");
    }
    ++i;
  }
  if (i != 3) throw UsageError("--weights expects a,b,c");
  return w;
}

std::uint64_t env_seed() {
  const char* value = std::getenv("CLONEBENCH_SEED");
  if (value == nullptr || *value == '\0') return 0;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(value, &used);
    if (value[used] != '\0') throw std::invalid_argument(value);
    return seed;
  } catch (const std::exception&) {
    throw UsageError(std::string("CLONEBENCH_SEED is not an unsigned integer: ") + value);
  }
}

// Config file first, then flags on top.
Resolved resolve(const MachineFlags& f) {
  Resolved r;
  r.config.seed = env_seed();
  std::string machine;
  std::string format = "csv";
  std::vector<sw::GridAxis> grid;
  std::optional<std::string> weights;
  if (!f.config_path.empty()) {
    boost::property_tree::ptree tree;
    try {
      boost::property_tree::read_ini(f.config_path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
    try {
      const auto& s = tree.get_child("sweep", boost::property_tree::ptree());
      machine = s.get<std::string>("machine", machine);
      r.config.d = s.get<int>("d", r.config.d);
      r.config.n = s.get<int>("n", r.config.n);
      r.config.seed = s.get<std::uint64_t>("seed", r.config.seed);
      r.config.jobs = s.get<int>("jobs", r.config.jobs);
      r.config.samples = s.get<int>("samples", r.config.samples);
      if (auto t = s.get_optional<double>("tolerance")) r.config.tolerance = *t;
      if (auto w = s.get_optional<std::string>("weights")) weights = *w;
      r.out = s.get<std::string>("out", r.out);
      format = s.get<std::string>("format", format);
      for (const auto& [name, value] : tree.get_child("grid", boost::property_tree::ptree())) {
        grid.push_back(sw::GridAxis::parse(name + "=" + value.data()));
      }
    } catch (const boost::property_tree::ptree_error& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
  }
  if (f.machine) machine = *f.machine;
  if (f.d) r.config.d = *f.d;
  if (f.n) r.config.n = *f.n;
  if (f.seed) r.config.seed = *f.seed;
  if (f.jobs) r.config.jobs = *f.jobs;
  if (f.samples) r.config.samples = *f.samples;
  if (f.tolerance) r.config.tolerance = *f.tolerance;
  if (f.weights) weights = *f.weights;
  if (f.out) r.out = *f.out;
  if (f.format) format = *f.format;
  if (!f.grid.empty()) {
    grid.clear();
    for (const auto& g : f.grid) grid.push_back(sw::GridAxis::parse(g));
  }
  if (machine.empty()) throw UsageError("--machine is required");
  r.config.machine = sw::parse_machine(machine);
  r.config.grid = std::move(grid);
  if (weights) r.config.weights = parse_weights(*weights);
  r.format = sw::parse_format(format);
  sw::validate(r.config);
  return r;
}

void add_machine_flags(CLI::App* cmd, MachineFlags& f) {
  cmd->add_option("--config", f.config_path, "INI file with [sweep] and [grid] sections; flags override it")
      ->check(CLI::ExistingFile);
  cmd->add_option("--machine", f.machine, "asym1n | tripartite | choi | pdc-112 | pdc-111 | pdc-1111");
  cmd->add_option("--d", f.d, "qudit dimension (tripartite, choi)");
  cmd->add_option("--n", f.n, "number of B clones (asym1n)");
  cmd->add_option("--seed", f.seed, "seed (default: $CLONEBENCH_SEED or 0)");
  cmd->add_option("--out", f.out, "output file (default: stdout)");
  cmd->add_option("--format", f.format, "csv | jsonl");
  cmd->add_option("--jobs", f.jobs, "worker threads");
  cmd->add_option("--tolerance", f.tolerance, "residual bound (default: per machine)");
  cmd->add_option("--samples", f.samples, "Haar inputs per numeric check");
  cmd->add_option("--weights", f.weights, "choi weights a,b,c");
}

// Writes to --out or stdout.
void emit(const std::string& path, const std::vector<sw::TradeoffRecord>& records, sw::Format format) {
  if (path.empty()) {
    sw::write_records(std::cout, records, format);
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output file " + path);
  sw::write_records(file, records, format);
  if (!file) throw std::runtime_error("failed writing " + path);
}

int run_sweep_cmd(const MachineFlags& flags) {
  const auto r = resolve(flags);
  const auto result = sw::run_sweep(r.config);
  emit(r.out, result.records, r.format);
  std::cerr << sw::summary_json(result.summary) << '\n';
  return result.summary.passed ? kExitOk : kExitFailure;
}

int run_point_cmd(const MachineFlags& flags, const std::vector<std::string>& at) {
  auto r = resolve(flags);
  std::map<std::string, double> params;
  for (const auto& item : at) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--at expects name=value");
    try {
      std::size_t used = 0;
      const std::string value = item.substr(eq + 1);
      params[item.substr(0, eq)] = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw UsageError("--at: cannot parse '" + item + "'");
    }
  }
  const auto records = sw::evaluate_point(r.config, params, r.config.seed);
  emit(r.out, records, r.format);
  const auto summary =
      sw::summarize_records(records, r.config.tolerance.value_or(sw::default_tolerance(r.config.machine)));
  std::cerr << sw::summary_json(summary) << '\n';
  return summary.passed ? kExitOk : kExitFailure;
}

int run_frontier_cmd(const MachineFlags& flags, int points) {
  const auto r = resolve(flags);
  emit(r.out, sw::frontier(r.config.machine, r.config.n, r.config.d, points), r.format);
  return kExitOk;
}

int run_verify_cmd(std::optional<std::uint64_t> seed, int jobs, int perturb, const std::string& json_path) {
  clonebench::verify::VerifyOptions options;
  options.seed = seed ? *seed : env_seed();
  options.jobs = jobs;
  options.perturb_criterion = perturb;
  const auto report = clonebench::verify::verify_all(options);
  std::cout << report.text();
  if (!json_path.empty()) {
    std::ofstream file(json_path);
    if (!file) throw UsageError("cannot open report file " + json_path);
    file << report.json() << '\n';
  }
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cloning-machine fidelity benchmarks"};
  app.require_subcommand(1);

  MachineFlags sweep_flags, point_flags, frontier_flags;
  auto* sweep = app.add_subcommand("sweep", "evaluate a parameter grid");
  add_machine_flags(sweep, sweep_flags);
  sweep->add_option("--grid", sweep_flags.grid, "axis as name=start:stop:points (repeatable)");

  auto* point = app.add_subcommand("point", "evaluate one parameter point");
  add_machine_flags(point, point_flags);
  std::vector<std::string> at;
  point->add_option("--at", at, "parameter as name=value (repeatable)");

  auto* front = app.add_subcommand("frontier", "optimal fidelity curve");
  add_machine_flags(front, frontier_flags);
  int points = 50;
  front->add_option("--points", points, "curve samples")->check(CLI::Range(2, 1000000));

  auto* verify = app.add_subcommand("verify", "run acceptance criteria 1-10");
  std::optional<std::uint64_t> verify_seed;
  int verify_jobs = 1;
  int perturb = 0;
  std::string json_path;
  verify->add_option("--seed", verify_seed, "seed (default: $CLONEBENCH_SEED or 0)");
  verify->add_option("--jobs", verify_jobs, "worker threads for grid criteria")->check(CLI::PositiveNumber);
  verify->add_option("--json", json_path, "also write the JSON report here");
  verify->add_option("--perturb", perturb, "negative control: offset the values of this criterion")
      ->check(CLI::Range(0, clonebench::verify::kCriteria));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*sweep) return run_sweep_cmd(sweep_flags);
    if (*point) return run_point_cmd(point_flags, at);
    if (*front) return run_frontier_cmd(frontier_flags, points);
    return run_verify_cmd(verify_seed, verify_jobs, perturb, json_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
