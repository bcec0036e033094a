// Copyright 2026 The Authors.
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

#ifndef RANDGREEDI_BOUND_SUITE_H_
#define RANDGREEDI_BOUND_SUITE_H_

#include <string>
#include <vector>

namespace randgreedi {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double wall_s = 0.0;
};

struct BoundSuiteOptions {
  // Shrinks trial counts and instance counts for smoke runs. Full mode is
  // the verification contract.
  bool quick = false;
};

// Runs every approximation-bound and determinism check at its pinned
// tolerance and returns one result per criterion, in order.
std::vector<CriterionResult> RunBoundSuite(const BoundSuiteOptions& options = {});

// Prints "[PASS]/[FAIL] criterion N (name): detail" lines to stdout and
// returns the number of failures.
int ReportBoundSuite(const std::vector<CriterionResult>& results);

}  // namespace randgreedi

#endif  // RANDGREEDI_BOUND_SUITE_H_
