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

// The acceptance suite: twelve end-to-end checks shared by the
// `verify-theorems` command and the acceptance test binary.

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace amity {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // One line; names the first failure when there is one.
  std::string summary;
  // Measured quantities, in insertion order.
  std::vector<std::pair<std::string, std::string>> facts;
  // Reproducible edge-list dumps of any violating digraph.
  std::vector<std::string> counterexamples;
};

struct AcceptanceOptions {
  // Criterion ids to run; empty runs all.
  std::vector<int> only;
  std::size_t threads = 1;
  // Called after each criterion finishes.
  std::function<void(const CriterionResult&)> on_result;
};

struct CriterionInfo {
  int id;
  std::string name;
};

const std::vector<CriterionInfo>& acceptance_criteria();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

// "[PASS] 3 complete5_cycle_packing: ..." style line.
std::string format_result_line(const CriterionResult& result);

}  // namespace amity
