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

#ifndef CLONEBENCH_VERIFY_HPP
#define CLONEBENCH_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

// One-shot acceptance harness: runs criteria 1-10 and reports every checked
// value with its reference, residual and tolerance.
namespace clonebench::verify {

inline constexpr int kCriteria = 10;

struct Check {
  std::string name;
  double expected = 0.0;
  double computed = 0.0;
  double residual = 0.0;   // |computed - expected|
  double tolerance = 0.0;  // passes when residual <= tolerance
  bool passed = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;
  /// Exception text when the criterion aborted; counts as a failure.
  std::string error;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Negative control: shifts every computed value of this criterion
  /// (1..10, 0 for none) by perturb_offset; the Monte Carlo criterion
  /// shifts its sample mean instead.
  int perturb_criterion = 0;
  double perturb_offset = 1e-2;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  double seconds = 0.0;

  bool passed() const;
  std::vector<int> failed_ids() const;
  /// One "criterion N: PASS|FAIL title" line per criterion followed by its checks.
  std::string text() const;
  std::string json() const;
};

/// Runs one criterion (1..10). Throws std::invalid_argument for other ids.
CriterionResult run_criterion(int id, const VerifyOptions& options);

/// Runs every criterion; failures are report entries, never exceptions.
VerifyReport verify_all(const VerifyOptions& options);

}  // namespace clonebench::verify

#endif  // CLONEBENCH_VERIFY_HPP
