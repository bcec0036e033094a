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

#include "randgreedi/partition.hpp"

#include <stdexcept>

#include "randgreedi/rng.hpp"

namespace randgreedi {

ElementSet Partition::Shard(int machine) const {
  std::vector<ElementId> ids;
  for (int e = 0; e < n(); ++e) {
    if (machine_of[e] == machine) ids.push_back(e);
  }
  return ElementSet(std::move(ids));
}

Partition PartitionRandom(int n, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("PartitionRandom: m must be >= 1");
  Partition p;
  p.machines = m;
  p.machine_of.resize(n);
  for (int e = 0; e < n; ++e) {
    p.machine_of[e] =
        rng::UniformInt(seed, rng::kPartition, static_cast<std::uint64_t>(e), m);
  }
  return p;
}

Partition PartitionFixed(int n, int m, FixedStrategy strategy) {
  if (m < 1) throw std::invalid_argument("PartitionFixed: m must be >= 1");
  Partition p;
  p.machines = m;
  p.machine_of.resize(n);
  for (int e = 0; e < n; ++e) {
    if (strategy == FixedStrategy::kBlock) {
      p.machine_of[e] = static_cast<int>(
          (static_cast<long long>(e) * m) / (n > 0 ? n : 1));
    } else {
      p.machine_of[e] = e % m;
    }
  }
  return p;
}

Partition PartitionExplicit(std::vector<int> assignment, int m) {
  if (m < 1) throw std::invalid_argument("PartitionExplicit: m must be >= 1");
  for (int a : assignment) {
    if (a < 0 || a >= m) {
      throw std::invalid_argument(
          "PartitionExplicit: machine id outside [0, m)");
    }
  }
  Partition p;
  p.machines = m;
  p.machine_of = std::move(assignment);
  return p;
}

}  // namespace randgreedi
