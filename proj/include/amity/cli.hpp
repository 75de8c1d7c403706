// Copyright 2026 The Amity Authors
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

// Command-line surface. Every command prints one JSON report on stdout:
//   {"command", "input_digest", "seed", "results", "version"}
// or {"command", "error": {"code", "message"}, "version"} on failure.
// Exit codes: 0 success, 1 negative result, 2 error.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace amity {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

struct CommandResult {
  int exit_code = 0;
  std::string out;  // JSON report
  std::string err;  // diagnostics
};

// `args` excludes the program name, e.g. {"enumerate", "--graph", "cycle(6)"}.
CommandResult run_command(const std::vector<std::string>& args);

// Runs argv, writes stdout/stderr and returns the exit code.
int cli_main(int argc, char** argv);

}  // namespace amity
