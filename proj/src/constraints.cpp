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

#include "randgreedi/constraints.hpp"

#include <numeric>
#include <stdexcept>

namespace randgreedi {

CardinalityConstraint::CardinalityConstraint(int k) : k_(k) {
  if (k < 0) throw std::invalid_argument("CardinalityConstraint: k < 0");
}

bool CardinalityConstraint::IsFeasible(const ElementSet& s) const {
  return s.size() <= k_;
}

PartitionMatroid::PartitionMatroid(std::vector<int> part_of,
                                   std::vector<int> capacity)
    : part_of_(std::move(part_of)), capacity_(std::move(capacity)) {
  for (int b : part_of_) {
    if (b < 0 || b >= static_cast<int>(capacity_.size())) {
      throw std::invalid_argument("PartitionMatroid: block id out of range");
    }
  }
  for (int c : capacity_) {
    if (c < 0) throw std::invalid_argument("PartitionMatroid: capacity < 0");
  }
  total_capacity_ = std::accumulate(capacity_.begin(), capacity_.end(), 0);
}

bool PartitionMatroid::IsFeasible(const ElementSet& s) const {
  std::vector<int> used(capacity_.size(), 0);
  for (ElementId e : s) {
    if (e >= static_cast<int>(part_of_.size())) {
      throw std::out_of_range("PartitionMatroid: element id out of range");
    }
    if (++used[part_of_[e]] > capacity_[part_of_[e]]) return false;
  }
  return true;
}

KnapsackConstraint::KnapsackConstraint(Eigen::VectorXd weights, double budget)
    : weights_(std::move(weights)), budget_(budget) {
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] > 0.0)) {
      throw std::invalid_argument("KnapsackConstraint: weights must be > 0");
    }
  }
  if (!(budget_ > 0.0)) {
    throw std::invalid_argument("KnapsackConstraint: budget must be > 0");
  }
}

bool KnapsackConstraint::IsFeasible(const ElementSet& s) const {
  double total = 0.0;
  for (ElementId e : s) {
    if (e >= weights_.size()) {
      throw std::out_of_range("KnapsackConstraint: element id out of range");
    }
    total += weights_[e];
  }
  return total <= budget_;
}

PSystemConstraint::PSystemConstraint(
    std::vector<std::shared_ptr<const ConstraintOracle>> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) {
    throw std::invalid_argument("PSystemConstraint: needs at least one part");
  }
  for (const auto& p : parts_) {
    if (!p) throw std::invalid_argument("PSystemConstraint: null part");
  }
}

bool PSystemConstraint::IsFeasible(const ElementSet& s) const {
  for (const auto& p : parts_) {
    if (!p->IsFeasible(s)) return false;
  }
  return true;
}

}  // namespace randgreedi
