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

#include "randgreedi/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "randgreedi/distributed.hpp"
#include "randgreedi/greedy.hpp"
#include "randgreedi/rng.hpp"

namespace randgreedi {

namespace {

constexpr int kEnumerationCap = 24;

void Consider(const ElementSet& s, double value, OptResult* best) {
  ++best->enumerated;
  // First strict improvement wins; lexicographic traversal order makes the
  // kept maximizer the lexicographically smallest among ties.
  if (best->enumerated == 1 || value > best->opt_value) {
    best->opt_set = s;
    best->opt_value = value;
  }
}

void EnumeratePruned(const std::vector<ElementId>& pool, std::size_t start,
                     ElementSet& s, const ValueOracle& f,
                     const ConstraintOracle& c, OptResult* best) {
  Consider(s, f.Eval(s), best);
  for (std::size_t i = start; i < pool.size(); ++i) {
    ElementSet next = s.With(pool[i]);
    if (!c.IsFeasible(next)) continue;  // prunes every superset too
    EnumeratePruned(pool, i + 1, next, f, c, best);
  }
}

void EnumeratePrunedWrap(const ElementSet& pool, const ValueOracle& f,
                         const ConstraintOracle& c, OptResult* best) {
  ElementSet empty;
  EnumeratePruned(pool.ids(), 0, empty, f, c, best);
}

}  // namespace

OptResult BruteForceOpt(const ElementSet& pool, const ValueOracle& f,
                        const ConstraintOracle& c) {
  if (pool.size() > kEnumerationCap) {
    throw std::invalid_argument(
        "BruteForceOpt: pool exceeds the 24-element enumeration cap");
  }
  OptResult best;
  EnumeratePrunedWrap(pool, f, c, &best);
  return best;
}

OptResult BruteForceOptNoPrune(const ElementSet& pool, const ValueOracle& f,
                               const ConstraintOracle& c) {
  if (pool.size() > kEnumerationCap) {
    throw std::invalid_argument(
        "BruteForceOptNoPrune: pool exceeds the 24-element enumeration cap");
  }
  OptResult best;
  const auto& ids = pool.ids();
  const std::uint64_t limit = 1ULL << ids.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<ElementId> members;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (mask & (1ULL << i)) members.push_back(ids[i]);
    }
    ElementSet s(std::move(members));
    if (!c.IsFeasible(s)) continue;
    double value = f.Eval(s);
    ++best.enumerated;
    bool better = best.enumerated == 1 || value > best.opt_value;
    bool tie_smaller =
        value == best.opt_value && s.ids() < best.opt_set.ids();
    if (better || tie_smaller) {
      best.opt_set = s;
      best.opt_value = value;
    }
  }
  return best;
}

EstimateReport EstimateExpectedValue(
    const std::function<double(std::uint64_t)>& run, int trials,
    std::uint64_t master_seed) {
  if (trials < 2) {
    throw std::invalid_argument("EstimateExpectedValue: trials must be >= 2");
  }
  std::vector<double> values(trials);
  for (int t = 0; t < trials; ++t) {
    values[t] = run(rng::DeriveSeed(master_seed, rng::kTrial, t));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= trials;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  double stddev = std::sqrt(ss / (trials - 1));

  EstimateReport report;
  report.mean = mean;
  report.std_error = stddev / std::sqrt(static_cast<double>(trials));
  report.trials = trials;
  report.seed = master_seed;
  return report;
}

bool CheckTheoremBound(const EstimateReport& report, const OptResult& opt,
                       double ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw std::invalid_argument("CheckTheoremBound: ratio outside (0,1]");
  }
  if (report.trials < 30) {
    throw std::invalid_argument(
        "CheckTheoremBound: bound checks need at least 30 trials");
  }
  return report.mean >= ratio * opt.opt_value - 3.0 * report.std_error;
}

std::pair<bool, double> CheckGp(const ValueOracle& f,
                                const ConstraintOracle& c,
                                const ElementSet& pool, double alpha) {
  if (pool.size() > kEnumerationCap) {
    throw std::invalid_argument(
        "CheckGp: pool exceeds the 24-element enumeration cap");
  }
  GreedyTrace g = Greedy(pool, f, c);
  const double fg = g.final_value;

  double worst = std::numeric_limits<double>::infinity();
  // Enumerate feasible S with the same pruned DFS as BruteForceOpt.
  std::function<void(std::size_t, ElementSet&)> rec =
      [&](std::size_t start, ElementSet& s) {
        double fu = f.Eval(ElementSet::UnionOf(g.final_set, s));
        if (fu > 1e-12) worst = std::min(worst, fg / fu);
        for (std::size_t i = start; i < pool.ids().size(); ++i) {
          ElementSet next = s.With(pool.ids()[i]);
          if (!c.IsFeasible(next)) continue;
          rec(i + 1, next);
        }
      };
  ElementSet empty;
  rec(0, empty);
  return {worst >= alpha - 1e-9, worst};
}

std::pair<double, double> CheckAppendixA(const Instance& inst,
                                         const Partition& partition, int k) {
  if (!inst.c || inst.c->Kind() != ConstraintKind::kCardinality) {
    throw std::invalid_argument(
        "CheckAppendixA: requires a cardinality constraint");
  }
  double opt_value;
  if (inst.known_opt.has_value()) {
    opt_value = *inst.known_opt;
  } else {
    opt_value =
        BruteForceOpt(ElementSet::Range(inst.n), *inst.f, *inst.c).opt_value;
  }
  RunReport report = DetGreeDi(inst, partition, GreedyLastAlg());
  double ratio = opt_value > 0.0 ? report.final_value / opt_value : 1.0;
  double bound = (1.0 - 1.0 / std::exp(1.0)) / (2.0 * std::sqrt(double(k)));
  return {ratio, bound};
}

}  // namespace randgreedi
