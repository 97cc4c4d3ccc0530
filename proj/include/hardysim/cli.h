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

#ifndef HARDYSIM_CLI_H_
#define HARDYSIM_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hardysim::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kIoError = 2,
  kValidationFailure = 3,
};

/// theta = 90 (mod 180) degrees sits on the tan pole; such inputs are run at
/// 89.99 degrees (mod 180) instead.
double substitute_pole(double theta_deg);

/// Entry point shared by the executable and tests. `args` excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hardysim::cli

#endif  // HARDYSIM_CLI_H_
