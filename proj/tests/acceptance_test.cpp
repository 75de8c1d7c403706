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

// Runs every acceptance criterion and prints one line per criterion.

#include <cstdlib>
#include <iostream>
#include <string>

#include "amity/acceptance.hpp"

int main(int argc, char** argv) {
  amity::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) options.only.push_back(std::atoi(argv[i]));
  options.on_result = [](const amity::CriterionResult& r) {
    std::cout << amity::format_result_line(r) << std::endl;
    for (const auto& [key, value] : r.facts) std::cout << "    " << key << " = " << value << "\n";
    for (const auto& dump : r.counterexamples) std::cout << dump;
  };
  int failed = 0;
  for (const auto& r : amity::run_acceptance(options)) failed += !r.passed;
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
