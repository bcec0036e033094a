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

#include "randgreedi/distributed.hpp"

#include <chrono>
#include <stdexcept>

#include "randgreedi/parallel.hpp"
#include "randgreedi/rng.hpp"

namespace randgreedi {

std::string BestSource::ToString() const {
  if (kind == kRound2) return "round2";
  return "round1:machine=" + std::to_string(machine) +
         ":pass=" + std::to_string(pass);
}

FeasibleSetAlg GreedyLastAlg() {
  return [](const ElementSet& pool, const ValueOracle& f,
            const ConstraintOracle& c, std::uint64_t) {
    return Greedy(pool, f, c);
  };
}

namespace {

struct MachineResult {
  std::vector<GreedyTrace> passes;
  long long oracle_calls = 0;
};

// Shared two-round skeleton. per_machine runs on disjoint shards (possibly
// concurrently, read-only oracles); merge and the final comparison are
// single-threaded, so reports are identical under any schedule.
RunReport TwoRound(
    const Instance& inst, const Partition& partition, std::uint64_t seed,
    const DistOptions& opts,
    const std::function<std::vector<GreedyTrace>(const ElementSet&)>&
        per_machine,
    const std::function<GreedyTrace(const ElementSet&, std::uint64_t)>& merge) {
  if (!inst.f || !inst.c) {
    throw std::invalid_argument("TwoRound: instance is missing oracles");
  }
  if (partition.n() != inst.n) {
    throw std::invalid_argument("TwoRound: partition size mismatch");
  }
  auto start = std::chrono::steady_clock::now();

  RunReport report;
  report.seed = seed;
  report.machines = partition.machines;

  const int m = partition.machines;
  std::vector<MachineResult> results(m);
  ParallelFor(m, EffectiveThreadCap(opts.max_threads), [&](int i) {
    MachineResult r;
    r.passes = per_machine(partition.Shard(i));
    for (const auto& t : r.passes) r.oracle_calls += t.oracle_calls;
    results[i] = std::move(r);
  });

  ElementSet merged;
  bool have_best = false;
  for (int i = 0; i < m; ++i) {
    report.oracle_calls += results[i].oracle_calls;
    for (int pass = 0; pass < static_cast<int>(results[i].passes.size());
         ++pass) {
      const GreedyTrace& t = results[i].passes[pass];
      merged = ElementSet::UnionOf(merged, t.final_set);
      report.round1_solutions.push_back(t.final_set);
      report.round1_values.push_back(t.final_value);
      if (!have_best || t.final_value > report.final_value) {
        have_best = true;
        report.final_set = t.final_set;
        report.final_value = t.final_value;
        report.best_source = {BestSource::kRound1, i, pass};
      }
    }
  }
  report.elements_sent = merged.size();

  GreedyTrace second =
      merge(merged, rng::DeriveSeed(seed, rng::kLastAlg, 0));
  report.oracle_calls += second.oracle_calls;
  report.round2_solution = second.final_set;
  report.round2_value = second.final_value;
  // Merge solution wins ties so the m=1 collapse reports the second round.
  if (second.final_value >= report.final_value) {
    report.final_set = second.final_set;
    report.final_value = second.final_value;
    report.best_source = {BestSource::kRound2, -1, 0};
  }

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

// Re-scores a trace with the global oracle (restricted-objective round 1).
GreedyTrace Rescore(GreedyTrace t, const ValueOracle& global,
                    long long* extra_calls) {
  t.final_value = global.Eval(t.final_set);
  ++*extra_calls;
  return t;
}

}  // namespace

RunReport RandGreeDi(const Instance& inst, int m, const FeasibleSetAlg& last,
                     std::uint64_t seed, const DistOptions& opts) {
  if (m < 1) throw std::invalid_argument("RandGreeDi: m must be >= 1");
  Partition partition = PartitionRandom(inst.n, m, seed);

  const ValueOracle& f = *inst.f;
  const ConstraintOracle& c = *inst.c;
  const auto* exemplar = dynamic_cast<const ExemplarObjective*>(inst.f.get());
  if (opts.restricted_round1 && exemplar == nullptr) {
    throw std::invalid_argument(
        "RandGreeDi: restricted_round1 requires an exemplar objective");
  }

  auto per_machine = [&](const ElementSet& shard) {
    std::vector<GreedyTrace> out;
    if (opts.restricted_round1) {
      auto local = exemplar->RestrictedTo(shard);
      long long extra = 0;
      out.push_back(Rescore(Greedy(shard, *local, c), f, &extra));
      out.back().oracle_calls += extra;
    } else {
      out.push_back(Greedy(shard, f, c));
    }
    return out;
  };
  auto merge = [&](const ElementSet& pool, std::uint64_t merge_seed) {
    return last(pool, f, c, merge_seed);
  };
  return TwoRound(inst, partition, seed, opts, per_machine, merge);
}

RunReport NmRandGreeDi(const Instance& inst, int m, std::uint64_t seed,
                       const DistOptions& opts) {
  if (m < 1) throw std::invalid_argument("NmRandGreeDi: m must be >= 1");
  Partition partition = PartitionRandom(inst.n, m, seed);

  const ValueOracle& f = *inst.f;
  const ConstraintOracle& c = *inst.c;
  auto per_machine = [&](const ElementSet& shard) {
    auto [s1, s2] = RepeatedGreedy(shard, f, c);
    return std::vector<GreedyTrace>{std::move(s1), std::move(s2)};
  };
  auto merge = [&](const ElementSet& pool, std::uint64_t merge_seed) {
    auto detail = internal::NonmonotoneComposeDetail(pool, f, c, merge_seed);
    GreedyTrace t;
    t.final_set = std::move(detail.best);
    t.final_value = detail.best_value;
    t.oracle_calls = detail.oracle_calls;
    return t;
  };
  return TwoRound(inst, partition, seed, opts, per_machine, merge);
}

RunReport DetGreeDi(const Instance& inst, const Partition& partition,
                    const FeasibleSetAlg& last, const DistOptions& opts) {
  const ValueOracle& f = *inst.f;
  const ConstraintOracle& c = *inst.c;
  auto per_machine = [&](const ElementSet& shard) {
    return std::vector<GreedyTrace>{Greedy(shard, f, c)};
  };
  auto merge = [&](const ElementSet& pool, std::uint64_t merge_seed) {
    return last(pool, f, c, merge_seed);
  };
  return TwoRound(inst, partition, /*seed=*/0, opts, per_machine, merge);
}

}  // namespace randgreedi
