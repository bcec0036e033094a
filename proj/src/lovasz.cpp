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

#include "randgreedi/lovasz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace randgreedi {

double MarginalGain(const ValueOracle& f, ElementId e, const ElementSet& s) {
  if (s.Contains(e)) {
    throw std::invalid_argument("MarginalGain: element already in set");
  }
  return f.Eval(s.With(e)) - f.Eval(s);
}

ElementSet ExtendableCandidates(const ConstraintOracle& c, const ElementSet& s,
                                const ElementSet& pool) {
  if (!c.IsFeasible(s)) {
    throw std::invalid_argument("ExtendableCandidates: infeasible base set");
  }
  std::vector<ElementId> out;
  for (ElementId e : pool) {
    if (s.Contains(e)) continue;
    if (c.IsFeasible(s.With(e))) out.push_back(e);
  }
  return ElementSet(std::move(out));
}

double LovaszExtension(const ValueOracle& f, const WeightVector& x) {
  const int n = f.GroundSize();
  if (x.size() != n) {
    throw std::invalid_argument("LovaszExtension: dimension mismatch");
  }
  for (int i = 0; i < n; ++i) {
    if (!(x[i] >= 0.0 && x[i] <= 1.0)) {
      throw std::invalid_argument("LovaszExtension: coordinate outside [0,1]");
    }
  }

  // Order coordinates descending, ties by ascending id; the value is
  // tie-independent but the intermediate prefix sets are then reproducible.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&x](int a, int b) {
    if (x[a] != x[b]) return x[a] > x[b];
    return a < b;
  });

  // f-(x) = (1 - x_(1)) f(empty) + sum_j (x_(j) - x_(j+1)) f(prefix_j)
  // with x_(n+1) := 0.
  double prev = 1.0;
  double total = 0.0;
  std::vector<ElementId> prefix;
  prefix.reserve(n);
  double fe = f.Eval(ElementSet());
  total += (prev - (n > 0 ? x[order[0]] : 0.0)) * fe;
  for (int j = 0; j < n; ++j) {
    prefix.push_back(order[j]);
    double hi = x[order[j]];
    double lo = (j + 1 < n) ? x[order[j + 1]] : 0.0;
    if (hi > lo) {
      total += (hi - lo) * f.Eval(ElementSet(prefix));
    }
  }
  return total;
}

bool CheckLovaszScaling(const ValueOracle& f, const WeightVector& x, double c,
                        double tol) {
  if (!(c >= 0.0 && c <= 1.0)) {
    throw std::invalid_argument("CheckLovaszScaling: c outside [0,1]");
  }
  double lhs = LovaszExtension(f, (c * x).eval());
  double rhs = c * LovaszExtension(f, x);
  return lhs >= rhs - tol;
}

}  // namespace randgreedi
