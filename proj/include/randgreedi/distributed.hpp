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

#ifndef RANDGREEDI_DISTRIBUTED_H_
#define RANDGREEDI_DISTRIBUTED_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "randgreedi/greedy.hpp"
#include "randgreedi/instance.hpp"
#include "randgreedi/partition.hpp"

namespace randgreedi {

// Source of the winning solution in a two-round run.
struct BestSource {
  enum Kind { kRound1, kRound2 } kind = kRound2;
  int machine = -1;  // valid for kRound1
  int pass = 0;      // 0 = first greedy pass, 1 = second (non-monotone runs)

  std::string ToString() const;
};

// Outcome of one distributed run. round1_solutions is machine-major; runs
// that execute two greedy passes per machine store both, pass-minor.
struct RunReport {
  ElementSet final_set;
  double final_value = 0.0;
  std::vector<ElementSet> round1_solutions;
  std::vector<double> round1_values;
  ElementSet round2_solution;
  double round2_value = 0.0;
  BestSource best_source;
  long long oracle_calls = 0;
  std::uint64_t seed = 0;
  int machines = 0;
  long long elements_sent = 0;  // |union of round-1 solutions|
  double wall_ms = 0.0;
};

// Any feasible-set-returning algorithm usable on the merge machine.
using FeasibleSetAlg = std::function<GreedyTrace(
    const ElementSet& pool, const ValueOracle& f, const ConstraintOracle& c,
    std::uint64_t seed)>;

// Standard greedy wrapped as a FeasibleSetAlg (ignores the seed).
FeasibleSetAlg GreedyLastAlg();

struct DistOptions {
  // <= 0 resolves to RGREEDI_THREADS or hardware concurrency. Round-1
  // machines run concurrently; outputs are identical for any cap.
  int max_threads = 0;
  // Exemplar instances only: round-1 greedy scores against the machine's own
  // shard instead of the full point set. Final comparisons always use the
  // global oracle.
  bool restricted_round1 = false;
};

// Two-round distributed greedy with a uniformly random partition: greedy per
// shard, `last` on the union of shard solutions, best of everything wins.
RunReport RandGreeDi(const Instance& inst, int m, const FeasibleSetAlg& last,
                     std::uint64_t seed, const DistOptions& opts = {});

// Non-monotone variant: two disjoint greedy passes per shard, then the
// greedy/greedy/double-greedy composite on the union.
RunReport NmRandGreeDi(const Instance& inst, int m, std::uint64_t seed,
                       const DistOptions& opts = {});

// Same two-round structure with a caller-supplied partition; fully
// deterministic when `last` is.
RunReport DetGreeDi(const Instance& inst, const Partition& partition,
                    const FeasibleSetAlg& last, const DistOptions& opts = {});

}  // namespace randgreedi

#endif  // RANDGREEDI_DISTRIBUTED_H_
