// Copyright 2026 The qmetric Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMETRIC_TOOLS_CLI_H_
#define QMETRIC_TOOLS_CLI_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmetric/gaussian.h"
#include "qmetric/solver.h"

namespace qmetric::cli {

// Process exit statuses shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalidInput = 2,
  kExitNotConverged = 3,
  kExitAuditFailed = 4,
};

// Runs the command line `args` (without the program name). Reports go to
// `out` unless --out names a file; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "mu,sigma" and "lambda,b,eta,c". Throw qmetric::Error(kInvalidArgument)
// with the flag name prefixed to the message.
GaussianState ParseState(std::string_view flag, std::string_view text);
AffineGaussianMap ParseMap(std::string_view flag, std::string_view text);

}  // namespace qmetric::cli

#endif  // QMETRIC_TOOLS_CLI_H_
