// Copyright 2026 The cvgup Authors
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

#ifndef CVGUP_CLI_H
#define CVGUP_CLI_H

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cvgup {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitGupDomain = 2,
    kExitDescriptor = 3,
    kExitKindMismatch = 4,
    kExitViolation = 5,
    kExitUsage = 64,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(std::span<const std::string> args, std::ostream &out, std::ostream &err);

/// Parses "A:B:N" or "A:B:N:log" / "A:B:N:linear" into the beta values.
/// Returns an empty vector when the text is malformed.
std::vector<double> parse_beta_grid(const std::string &text);

}  // namespace cvgup

#endif  // CVGUP_CLI_H
