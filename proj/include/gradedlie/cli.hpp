/* Copyright 2026 The gradedlie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

// Command-line front end. Exit codes: 0 all checks verified or query answered,
// 1 counterexample, failed check or hypothesis violation, 2 invalid input,
// 3 budget exceeded, 4 internal error.

#ifndef GRADEDLIE_CLI_HPP
#define GRADEDLIE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gradedlie::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kInvalidInput = 2, kBudgetExceeded = 3, kInternalError = 4 };

// Environment variable holding the default per-check budget in seconds.
inline constexpr const char* kBudgetVariable = "GRADEDLIE_BUDGET_SECONDS";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradedlie::cli

#endif  // GRADEDLIE_CLI_HPP
