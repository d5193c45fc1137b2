/*
   Copyright 2026 The milnor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milnor::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kNotReduced = 2,
    kRankDisagreement = 3,
    kInvariantViolation = 4,
    kMissingChi = 5,
    kGaloisViolation = 6,
};

/// Runs the tool with args (without the program name), writing results to
/// out and progress and diagnostics to err. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace milnor::cli
