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

#ifndef RANDGREEDI_CONSTRAINTS_H_
#define RANDGREEDI_CONSTRAINTS_H_

#include <Eigen/Dense>
#include <memory>
#include <vector>

#include "randgreedi/oracle.hpp"

namespace randgreedi {

// |S| <= k.
class CardinalityConstraint : public ConstraintOracle {
 public:
  explicit CardinalityConstraint(int k);

  bool IsFeasible(const ElementSet& s) const override;
  ConstraintKind Kind() const override { return ConstraintKind::kCardinality; }

  int k() const { return k_; }

 private:
  int k_;
};

// At most capacity[b] selected elements in each block b.
class PartitionMatroid : public ConstraintOracle {
 public:
  PartitionMatroid(std::vector<int> part_of, std::vector<int> capacity);

  bool IsFeasible(const ElementSet& s) const override;
  ConstraintKind Kind() const override {
    return ConstraintKind::kPartitionMatroid;
  }

  const std::vector<int>& part_of() const { return part_of_; }
  const std::vector<int>& capacity() const { return capacity_; }
  int total_capacity() const { return total_capacity_; }

 private:
  std::vector<int> part_of_;
  std::vector<int> capacity_;
  int total_capacity_;
};

// sum of selected weights <= budget, inclusive. Comparison is exact; weights
// are expected to be representable so feasibility never hinges on a
// tolerance.
class KnapsackConstraint : public ConstraintOracle {
 public:
  KnapsackConstraint(Eigen::VectorXd weights, double budget);

  bool IsFeasible(const ElementSet& s) const override;
  ConstraintKind Kind() const override { return ConstraintKind::kKnapsack; }

  const Eigen::VectorXd& weights() const { return weights_; }
  double budget() const { return budget_; }

 private:
  Eigen::VectorXd weights_;
  double budget_;
};

// Intersection of p matroid-type constraints. Only intersection instances
// are constructed by this artifact; the membership interface is the general
// p-system hook.
class PSystemConstraint : public ConstraintOracle {
 public:
  explicit PSystemConstraint(
      std::vector<std::shared_ptr<const ConstraintOracle>> parts);

  bool IsFeasible(const ElementSet& s) const override;
  ConstraintKind Kind() const override { return ConstraintKind::kPSystem; }

  int p() const { return static_cast<int>(parts_.size()); }
  const std::vector<std::shared_ptr<const ConstraintOracle>>& parts() const {
    return parts_;
  }

 private:
  std::vector<std::shared_ptr<const ConstraintOracle>> parts_;
};

}  // namespace randgreedi

#endif  // RANDGREEDI_CONSTRAINTS_H_
