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

#ifndef RANDGREEDI_PARTITION_H_
#define RANDGREEDI_PARTITION_H_

#include <cstdint>
#include <vector>

#include "randgreedi/element_set.hpp"

namespace randgreedi {

// Total assignment of every ground-set element to one of `machines` shards.
// Machines may be empty.
struct Partition {
  std::vector<int> machine_of;
  int machines = 0;

  int n() const { return static_cast<int>(machine_of.size()); }
  ElementSet Shard(int machine) const;
};

// Each element assigned independently and uniformly at random, drawn from the
// counter RNG so the result depends only on (n, m, seed).
Partition PartitionRandom(int n, int m, std::uint64_t seed);

enum class FixedStrategy { kBlock, kRoundRobin };

// kBlock: element e to machine floor(e*m/n); kRoundRobin: e mod m.
Partition PartitionFixed(int n, int m, FixedStrategy strategy);

// Validated explicit assignment.
Partition PartitionExplicit(std::vector<int> assignment, int m);

}  // namespace randgreedi

#endif  // RANDGREEDI_PARTITION_H_
