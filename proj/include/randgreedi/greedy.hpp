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

#ifndef RANDGREEDI_GREEDY_H_
#define RANDGREEDI_GREEDY_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "randgreedi/constraints.hpp"
#include "randgreedi/oracle.hpp"

namespace randgreedi {

// Execution record of one greedy run. picks holds (element, marginal gain at
// pick time) in pick order; final_set is exactly the picked elements.
struct GreedyTrace {
  std::vector<std::pair<ElementId, double>> picks;
  ElementSet final_set;
  double final_value = 0.0;
  long long oracle_calls = 0;
};

// Standard greedy: repeatedly add the feasible element of maximum marginal
// gain, smallest id winning ties; zero-gain elements are added; stops when no
// candidate remains or the best gain is strictly negative. Uses lazy gain
// re-evaluation internally; the pick sequence is identical to GreedyNaive.
GreedyTrace Greedy(const ElementSet& pool, const ValueOracle& f,
                   const ConstraintOracle& c);

// Reference implementation that rescans every candidate each round.
GreedyTrace GreedyNaive(const ElementSet& pool, const ValueOracle& f,
                        const ConstraintOracle& c);

// Two disjoint greedy passes: S1 = Greedy(pool), S2 = Greedy(pool \ S1).
std::pair<GreedyTrace, GreedyTrace> RepeatedGreedy(const ElementSet& pool,
                                                   const ValueOracle& f,
                                                   const ConstraintOracle& c);

// Randomized double greedy for unconstrained maximization of a non-negative
// submodular f over subsets of pool. Scans elements in ascending id order;
// each inclusion coin comes from the counter RNG keyed by (seed, element), so
// results are reproducible and schedule-independent. In expectation the
// result is within 1/2 of the unconstrained maximum.
ElementSet DoubleGreedyUnconstrained(const ElementSet& pool,
                                     const ValueOracle& f, std::uint64_t seed);

// Greedy / greedy-on-remainder / double-greedy composite for non-monotone
// objectives: T1 = Greedy(pool), T2 = Greedy(pool \ T1), T3 = double greedy
// restricted to T1; returns the best of the three (earlier wins ties). The
// result is feasible since T3 is a subset of T1 and the family is hereditary.
ElementSet NonmonotoneCompose(const ElementSet& pool, const ValueOracle& f,
                              const ConstraintOracle& c, std::uint64_t seed);

// Knapsack variant: gain-per-weight greedy, then the better of that run and
// the best feasible singleton. Guarantees (1-1/e)/2 vs the optimum for
// monotone objectives.
GreedyTrace KnapsackDensityGreedy(const ElementSet& pool, const ValueOracle& f,
                                  const KnapsackConstraint& c);

namespace internal {
struct ComposeResult {
  ElementSet best;
  double best_value = 0.0;
  long long oracle_calls = 0;
};
ComposeResult NonmonotoneComposeDetail(const ElementSet& pool,
                                       const ValueOracle& f,
                                       const ConstraintOracle& c,
                                       std::uint64_t seed);
}  // namespace internal

}  // namespace randgreedi

#endif  // RANDGREEDI_GREEDY_H_
