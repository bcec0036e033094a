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

#ifndef RANDGREEDI_OBJECTIVES_H_
#define RANDGREEDI_OBJECTIVES_H_

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "randgreedi/oracle.hpp"

namespace randgreedi {

// f(S) = sum of weights of selected elements. Modular, hence monotone and
// submodular; degenerate objective used mostly by tests.
class ModularObjective : public ValueOracle {
 public:
  explicit ModularObjective(Eigen::VectorXd weights);

  double Eval(const ElementSet& s) const override;
  int GroundSize() const override { return static_cast<int>(weights_.size()); }
  bool MonotoneHint() const override { return true; }

  const Eigen::VectorXd& weights() const { return weights_; }

 private:
  Eigen::VectorXd weights_;
};

// Max coverage: ground element i is the i-th subset of a universe,
// f(S) = |union of selected subsets|.
class CoverageObjective : public ValueOracle {
 public:
  CoverageObjective(int universe_size, std::vector<std::vector<int>> sets);

  double Eval(const ElementSet& s) const override;
  int GroundSize() const override { return static_cast<int>(sets_.size()); }
  bool MonotoneHint() const override { return true; }

  int universe_size() const { return universe_size_; }
  const std::vector<std::vector<int>>& sets() const { return sets_; }

  // Original item labels when the instance came from a transaction file;
  // item_labels()[dense_id] is the label in the source data.
  const std::vector<long long>& item_labels() const { return item_labels_; }
  void set_item_labels(std::vector<long long> labels) {
    item_labels_ = std::move(labels);
  }

 private:
  int universe_size_;
  std::vector<std::vector<int>> sets_;
  std::vector<long long> item_labels_;
};

// Exemplar clustering turned into monotone submodular maximization:
// with L(A) = (1/n) sum_v min_{a in A} |a - v|^2 over the point set and v0
// the zero vector, f(S) = L({v0}) - L(S u {v0}).
class ExemplarObjective : public ValueOracle {
 public:
  // Rows of `points` are the (already normalized) data vectors. When
  // sample_size > 0, L is averaged over a fixed seeded subset of that many
  // points instead of the full set.
  explicit ExemplarObjective(Eigen::MatrixXd points, int sample_size = 0,
                             std::uint64_t sample_seed = 0);

  double Eval(const ElementSet& s) const override;
  int GroundSize() const override { return static_cast<int>(points_.rows()); }
  bool MonotoneHint() const override { return true; }

  const Eigen::MatrixXd& points() const { return points_; }

  // Same objective with L averaged over `members` only; used by the
  // distributed option where each machine scores against its own shard.
  std::shared_ptr<ExemplarObjective> RestrictedTo(
      const ElementSet& members) const;

 private:
  ExemplarObjective(Eigen::MatrixXd points, std::vector<int> eval_points);

  double EvalOver(const ElementSet& s, const std::vector<int>& pts) const;

  Eigen::MatrixXd points_;
  Eigen::MatrixXd sq_dist_;        // pairwise |x_i - x_j|^2
  Eigen::VectorXd sq_norm_;        // |x_i|^2 = d(v0, x_i)
  std::vector<int> eval_points_;   // points L averages over
};

// Diverse-yet-relevant selection: f(A) = sum_{i in V} sum_{j in A} s_ij
// - lambda * sum_{i,j in A} s_ij. Non-monotone for lambda large enough; the
// raw formula may go negative on infeasible sets and is reported as-is.
class DiversityObjective : public ValueOracle {
 public:
  DiversityObjective(Eigen::MatrixXd similarity, double lambda);

  double Eval(const ElementSet& s) const override;
  int GroundSize() const override {
    return static_cast<int>(similarity_.rows());
  }

  const Eigen::MatrixXd& similarity() const { return similarity_; }
  double lambda() const { return lambda_; }

 private:
  Eigen::MatrixXd similarity_;
  Eigen::VectorXd col_sum_;
  double lambda_;
};

}  // namespace randgreedi

#endif  // RANDGREEDI_OBJECTIVES_H_
