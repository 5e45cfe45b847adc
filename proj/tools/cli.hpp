// Copyright 2026 The Teamform Authors
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

// The teamform command-line front end, callable in-process.
//
// Exit codes: 0 success, 1 bad input or failed certificate, 2 infeasible
// task or empty corpus, 3 heuristic failure, 4 size guard refusal.

#ifndef TEAMFORM_TOOLS_CLI_HPP_
#define TEAMFORM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace teamform::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitHeuristic = 3;
inline constexpr int kExitGuard = 4;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace teamform::cli

#endif  // TEAMFORM_TOOLS_CLI_HPP_
