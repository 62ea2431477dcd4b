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

#ifndef CLONEBENCH_SWEEP_HPP
#define CLONEBENCH_SWEEP_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Parameter sweeps over the cloning machines, producing one record per grid
// point with an oracle residual.
namespace clonebench::sweep {

inline constexpr int kSchemaVersion = 1;

enum class Machine {
  kAsym1n,      // sandwich 1 -> 1+n cloner, axis y
  kTripartite,  // 1 -> 1+1+1 coefficient family, axes alpha, beta, gamma
  kChoi,        // optimal cloner for weights (a, (1-a) t, (1-a)(1-t)), axes a, t
  kPdc112,      // optical 1 -> 1+2, axis T, two branches per point
  kPdc111,      // optical 1 -> 1+1, axis T
  kPdc1111,     // optical 1 -> 1+1+1, axes T1, T2
};

/// "asym1n", "tripartite", "choi", "pdc-112", "pdc-111", "pdc-1111".
std::string_view machine_name(Machine m);
/// Throws std::invalid_argument for an unknown name.
Machine parse_machine(std::string_view name);

/// Parameter axes accepted by a machine, in grid order.
std::vector<std::string> machine_axes(Machine m);
/// Residual bound used when the config leaves the tolerance unset.
double default_tolerance(Machine m);

struct GridAxis {
  std::string name;
  double start = 0.0;
  double stop = 1.0;
  int points = 2;

  double value(int i) const;
  /// Parses "name=start:stop:points". Throws std::invalid_argument on a
  /// malformed spec or points < 2.
  static GridAxis parse(std::string_view spec);
};

struct SweepConfig {
  Machine machine = Machine::kAsym1n;
  std::vector<GridAxis> grid;  // empty: machine default
  int d = 2;
  int n = 2;
  std::uint64_t seed = 0;
  int jobs = 1;
  int samples = 16;                   // Haar inputs for numeric checks
  std::optional<double> tolerance;    // default_tolerance when unset
  std::array<double, 3> weights{1.0 / 3, 1.0 / 3, 1.0 / 3};  // choi point evaluation
};

/// Throws std::invalid_argument for unknown axes, duplicated axes, values
/// outside an axis domain, or d, n, jobs, samples out of range.
void validate(const SweepConfig& config);

/// Default grid of a machine.
std::vector<GridAxis> default_grid(Machine m);

struct TradeoffRecord {
  Machine machine = Machine::kAsym1n;
  std::vector<std::pair<std::string, double>> params;
  std::optional<int> branch;          // pdc-112: 1 single photon in A, 2 pair in A
  std::vector<double> fidelities;     // A, B[, C]
  std::vector<double> etas;           // shrinking factor per clone
  std::optional<double> probability;  // optical schemes
  double residual = 0.0;              // |oracle - computed|, max over the record
};

/// Evaluates one parameter point. Missing parameters take the machine
/// defaults (tripartite: alpha 1, beta 0, gamma 0; choi: config weights).
std::vector<TradeoffRecord> evaluate_point(const SweepConfig& config, const std::map<std::string, double>& params,
                                           std::uint64_t seed);

struct SweepSummary {
  std::size_t records = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

struct SweepResult {
  std::vector<TradeoffRecord> records;  // grid order
  SweepSummary summary;
};

/// Evaluates every grid point on `jobs` workers. Point i uses
/// derive_seed(seed, i); records are returned in grid order.
SweepResult run_sweep(const SweepConfig& config);

/// Optimal curve without numeric checks: asym1n over y in [0, y*] with
/// `points` samples, tripartite / choi over weights (t, 1-t, 0).
std::vector<TradeoffRecord> frontier(Machine m, int n, int d, int points);

SweepSummary summarize_records(const std::vector<TradeoffRecord>& records, double tolerance);

enum class Format { kCsv, kJsonl };
/// Throws std::invalid_argument for anything but "csv" or "jsonl".
Format parse_format(std::string_view name);

/// CSV columns of a record: parameters, branch (pdc-112), F_A.., prob
/// (optical), residual. pdc-112 gives exactly T,branch,F_A,F_B,prob,residual.
/// Shrinking factors appear in JSON lines only.
std::string csv_header(const TradeoffRecord& r);
void write_records(std::ostream& out, const std::vector<TradeoffRecord>& records, Format format);
std::string summary_json(const SweepSummary& s);

}  // namespace clonebench::sweep

#endif  // CLONEBENCH_SWEEP_HPP
