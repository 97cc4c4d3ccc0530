// Copyright 2026 The hardysim Authors
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

#ifndef HARDYSIM_VALIDATE_H_
#define HARDYSIM_VALIDATE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace hardysim {

struct ValidationOptions {
  /// Added to lambda in the coupling decomposition. Non-zero values break the
  /// coupling identity and exist to exercise the failure path.
  double lambda_skew = 0.0;
  /// Points per axis of the 0..180 degree grid.
  int grid_points = 181;
  int random_trials = 1000;
  std::uint64_t seed = 2024;
};

struct SuiteResult {
  std::string name;
  bool passed;
  std::size_t checks;
  /// Worst deviation or first failing case.
  std::string detail;
};

struct ValidationReport {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// Runs the built-in invariant suites: gate unitarity, the U_B/U3 anchor, the
/// coupling decomposition identity, state preparation, Hardy-equation
/// vanishing, closed-form q equivalence, outcome normalization, state
/// classification, the q_max optimum, and the phi = 90 degree failure set.
ValidationReport run_validation(const ValidationOptions& opts = {});

}  // namespace hardysim

#endif  // HARDYSIM_VALIDATE_H_
