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

#ifndef RANDGREEDI_LOVASZ_H_
#define RANDGREEDI_LOVASZ_H_

#include <Eigen/Dense>

#include "randgreedi/oracle.hpp"

namespace randgreedi {

// A point in [0,1]^n; coordinate i weights ground element i.
using WeightVector = Eigen::VectorXd;

// Exact Lovasz extension value E_{theta~U(0,1)} f({i : x_i >= theta}),
// computed by sorting coordinates in descending order (ties broken by
// ascending id) and summing threshold-interval-weighted prefix evaluations.
// Uses at most n+1 oracle calls. Rejects coordinates outside [0,1] and
// dimension mismatches.
double LovaszExtension(const ValueOracle& f, const WeightVector& x);

// True iff f-(c*x) >= c*f-(x) - tol, both sides evaluated exactly.
bool CheckLovaszScaling(const ValueOracle& f, const WeightVector& x, double c,
                        double tol = 1e-9);

}  // namespace randgreedi

#endif  // RANDGREEDI_LOVASZ_H_
