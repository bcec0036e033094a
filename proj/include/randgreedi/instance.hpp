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

#ifndef RANDGREEDI_INSTANCE_H_
#define RANDGREEDI_INSTANCE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "randgreedi/constraints.hpp"
#include "randgreedi/objectives.hpp"
#include "randgreedi/oracle.hpp"
#include "randgreedi/partition.hpp"

namespace randgreedi {

// A problem instance: ground set, value oracle, feasibility oracle, plus
// optional metadata (known optimum, an adversarial machine assignment).
struct Instance {
  std::string name;
  std::shared_ptr<const ValueOracle> f;
  std::shared_ptr<const ConstraintOracle> c;
  int n = 0;
  std::optional<double> known_opt;
  std::optional<Partition> adversarial_partition;
};

// Same instance under an additional cardinality bound. A plain cardinality
// constraint is replaced outright; anything else is intersected with the
// bound (a 2-system when the base is a matroid).
Instance WithCardinality(const Instance& inst, int k);

// Max-k-coverage family on which a worst-case machine assignment caps the
// deterministic two-round algorithm near 1/sqrt(k): machine 0 holds the l
// optimal base sets, every other machine holds one optimal block plus l
// decoy sets that dominate it; all machines are padded with empty sets. Ids
// are laid out so each machine's padding precedes its optimal block, which
// pins the greedy trace. k = l + l^2, optimum covers l^2 + l^3.
Instance GenTightInstance(int l);

// Similarity matrix with symmetric U(0,100) entries, zero diagonal,
// redundancy weight lambda = n/k, cardinality-k constraint.
Instance GenDiverseRelevant(int n, int k, std::uint64_t seed);

// Elliptic coverage profiles on a unit-square demand grid: each of
// n_facilities lattice facilities gets r random ellipses; ground set =
// ellipses, value = demand points covered, constraint = at most one ellipse
// per facility. Add the activation budget with WithCardinality.
Instance GenMatroidCoverage(int n_facilities, int r, int demand_grid,
                            std::uint64_t seed);

// One transaction per line, space-separated positive integer item ids; blank
// lines skipped; item ids re-indexed densely in first-occurrence order.
// Ground element i = transaction i under a cardinality-k constraint.
Instance LoadFimi(const std::string& path, int k);

// Independent Bernoulli(density) set membership; unconstrained (attach k
// with WithCardinality).
Instance GenRandomCoverage(int n_sets, int universe, double density,
                           std::uint64_t seed);

// Seeded random vectors, per-vector mean subtracted then unit-normalized;
// unconstrained.
Instance GenExemplar(int n, int d, std::uint64_t seed);

// Writes a coverage objective as FIMI transactions (used by the CLI gen
// subcommand). Empty sets produce blank lines, which a reader skips.
void SaveFimi(const CoverageObjective& coverage, const std::string& path);

}  // namespace randgreedi

#endif  // RANDGREEDI_INSTANCE_H_
