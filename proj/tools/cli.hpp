/*
   Copyright 2026 The scatlin Authors

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

#ifndef SCATLIN_TOOLS_CLI_HPP
#define SCATLIN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace scatlin::cli {

enum ExitCode : int { ok = 0, math_mismatch = 1, usage_error = 2 };

/// Runs one scatlin invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names accepted by `scatlin reproduce`.
const std::vector<std::string>& reproduce_tags();

}  // namespace scatlin::cli

#endif  // SCATLIN_TOOLS_CLI_HPP
