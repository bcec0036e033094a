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

#ifndef RANDGREEDI_VERIFY_H_
#define RANDGREEDI_VERIFY_H_

#include <cstdint>
#include <functional>
#include <utility>

#include "randgreedi/instance.hpp"
#include "randgreedi/oracle.hpp"
#include "randgreedi/partition.hpp"

namespace randgreedi {

// Exhaustively verified optimum over a pool.
struct OptResult {
  ElementSet opt_set;
  double opt_value = 0.0;
  long long enumerated = 0;  // feasible sets examined
};

// Enumerates feasible subsets of pool in lexicographic order with hereditary
// pruning (supersets of an infeasible set are skipped); ties resolve to the
// lexicographically smallest set. Pools beyond 24 elements are refused.
OptResult BruteForceOpt(const ElementSet& pool, const ValueOracle& f,
                        const ConstraintOracle& c);

// Pruning-free reference used to cross-check the enumerator on small pools.
OptResult BruteForceOptNoPrune(const ElementSet& pool, const ValueOracle& f,
                               const ConstraintOracle& c);

// Monte Carlo estimate of a seeded run's expected value.
struct EstimateReport {
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
};

// Runs `run` with seeds derived from master_seed for indices 0..trials-1.
// Requires trials >= 2.
EstimateReport EstimateExpectedValue(
    const std::function<double(std::uint64_t)>& run, int trials,
    std::uint64_t master_seed);

// mean >= ratio * opt - 3 * SE, the one-sided slack used for every
// "in expectation" guarantee. Requires ratio in (0,1] and trials >= 30.
bool CheckTheoremBound(const EstimateReport& report, const OptResult& opt,
                       double ratio);

// Evaluates f(Greedy(pool)) >= alpha * f(Greedy(pool) u S) over every
// feasible S by full enumeration. Returns (pass, worst observed ratio).
std::pair<bool, double> CheckGp(const ValueOracle& f,
                                const ConstraintOracle& c,
                                const ElementSet& pool, double alpha);

// Deterministic two-round ratio vs optimum under a cardinality budget k,
// paired with the (1-1/e)/(2 sqrt(k)) floor it must clear. Returns
// (achieved ratio, bound); rejects non-cardinality constraints.
std::pair<double, double> CheckAppendixA(const Instance& inst,
                                         const Partition& partition, int k);

}  // namespace randgreedi

#endif  // RANDGREEDI_VERIFY_H_
