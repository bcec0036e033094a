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

#include "randgreedi/objectives.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "randgreedi/rng.hpp"

namespace randgreedi {

namespace {

void CheckIds(const ElementSet& s, int n, const char* who) {
  if (!s.empty() && s.ids().back() >= n) {
    throw std::out_of_range(std::string(who) + ": element id out of range");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// ModularObjective

ModularObjective::ModularObjective(Eigen::VectorXd weights)
    : weights_(std::move(weights)) {
  for (Eigen::Index i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0.0) {
      throw std::invalid_argument("ModularObjective: negative weight");
    }
  }
}

double ModularObjective::Eval(const ElementSet& s) const {
  CheckIds(s, GroundSize(), "ModularObjective");
  double total = 0.0;
  for (ElementId e : s) total += weights_[e];
  return total;
}

// ---------------------------------------------------------------------------
// CoverageObjective

CoverageObjective::CoverageObjective(int universe_size,
                                     std::vector<std::vector<int>> sets)
    : universe_size_(universe_size), sets_(std::move(sets)) {
  if (universe_size_ < 0) {
    throw std::invalid_argument("CoverageObjective: negative universe");
  }
  for (auto& set : sets_) {
    for (int item : set) {
      if (item < 0 || item >= universe_size_) {
        throw std::invalid_argument(
            "CoverageObjective: universe item out of range");
      }
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
}

double CoverageObjective::Eval(const ElementSet& s) const {
  CheckIds(s, GroundSize(), "CoverageObjective");
  std::vector<char> covered(universe_size_, 0);
  int count = 0;
  for (ElementId e : s) {
    for (int item : sets_[e]) {
      if (!covered[item]) {
        covered[item] = 1;
        ++count;
      }
    }
  }
  return static_cast<double>(count);
}

// ---------------------------------------------------------------------------
// ExemplarObjective

ExemplarObjective::ExemplarObjective(Eigen::MatrixXd points, int sample_size,
                                     std::uint64_t sample_seed)
    : points_(std::move(points)) {
  const int n = static_cast<int>(points_.rows());
  sq_norm_ = points_.rowwise().squaredNorm();
  // |x - y|^2 = |x|^2 + |y|^2 - 2 x.y
  sq_dist_ = (-2.0 * points_ * points_.transpose());
  sq_dist_.colwise() += sq_norm_;
  sq_dist_.rowwise() += sq_norm_.transpose();
  sq_dist_ = sq_dist_.cwiseMax(0.0);

  if (sample_size <= 0 || sample_size >= n) {
    eval_points_.resize(n);
    std::iota(eval_points_.begin(), eval_points_.end(), 0);
  } else {
    // Seeded sample without replacement (partial Fisher-Yates).
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < sample_size; ++i) {
      int j = i + rng::UniformInt(sample_seed, rng::kSampling, i, n - i);
      std::swap(pool[i], pool[j]);
    }
    eval_points_.assign(pool.begin(), pool.begin() + sample_size);
    std::sort(eval_points_.begin(), eval_points_.end());
  }
}

ExemplarObjective::ExemplarObjective(Eigen::MatrixXd points,
                                     std::vector<int> eval_points)
    : ExemplarObjective(std::move(points)) {
  eval_points_ = std::move(eval_points);
}

double ExemplarObjective::EvalOver(const ElementSet& s,
                                   const std::vector<int>& pts) const {
  CheckIds(s, GroundSize(), "ExemplarObjective");
  if (pts.empty()) return 0.0;
  // f(S) = (1/|pts|) sum_v [ d(v0,v) - min(d(v0,v), min_{a in S} d(a,v)) ].
  double total = 0.0;
  for (int v : pts) {
    double base = sq_norm_[v];
    double best = base;
    for (ElementId a : s) best = std::min(best, sq_dist_(a, v));
    total += base - best;
  }
  return total / static_cast<double>(pts.size());
}

double ExemplarObjective::Eval(const ElementSet& s) const {
  return EvalOver(s, eval_points_);
}

std::shared_ptr<ExemplarObjective> ExemplarObjective::RestrictedTo(
    const ElementSet& members) const {
  CheckIds(members, GroundSize(), "ExemplarObjective");
  return std::shared_ptr<ExemplarObjective>(
      new ExemplarObjective(points_, members.ids()));
}

// ---------------------------------------------------------------------------
// DiversityObjective

DiversityObjective::DiversityObjective(Eigen::MatrixXd similarity,
                                       double lambda)
    : similarity_(std::move(similarity)), lambda_(lambda) {
  if (similarity_.rows() != similarity_.cols()) {
    throw std::invalid_argument("DiversityObjective: matrix not square");
  }
  if ((similarity_.array() < 0.0).any()) {
    throw std::invalid_argument("DiversityObjective: negative similarity");
  }
  col_sum_ = similarity_.colwise().sum();
}

double DiversityObjective::Eval(const ElementSet& s) const {
  CheckIds(s, GroundSize(), "DiversityObjective");
  double relevance = 0.0;
  for (ElementId j : s) relevance += col_sum_[j];
  double redundancy = 0.0;
  for (ElementId i : s) {
    for (ElementId j : s) redundancy += similarity_(i, j);
  }
  return relevance - lambda_ * redundancy;
}

}  // namespace randgreedi
