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

#ifndef RANDGREEDI_ORACLE_H_
#define RANDGREEDI_ORACLE_H_

#include "randgreedi/element_set.hpp"

namespace randgreedi {

// Black-box set function f: 2^V -> R>=0. Implementations hold no mutable
// state after construction and are safe for concurrent evaluation.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  virtual double Eval(const ElementSet& s) const = 0;
  virtual int GroundSize() const = 0;

  // Advisory only; algorithms never rely on it for correctness.
  virtual bool MonotoneHint() const { return false; }
};

// f(S u {e}) - f(S). May be negative for non-monotone f. Rejects e in S.
double MarginalGain(const ValueOracle& f, ElementId e, const ElementSet& s);

enum class ConstraintKind {
  kCardinality,
  kPartitionMatroid,
  kKnapsack,
  kPSystem,
};

// Membership oracle for a hereditary family I (subsets of feasible sets are
// feasible, and the empty set always is). Pure and thread-safe.
class ConstraintOracle {
 public:
  virtual ~ConstraintOracle() = default;

  virtual bool IsFeasible(const ElementSet& s) const = 0;
  virtual ConstraintKind Kind() const = 0;
};

// Pool elements e not in s with s u {e} feasible. Rejects infeasible s.
ElementSet ExtendableCandidates(const ConstraintOracle& c, const ElementSet& s,
                                const ElementSet& pool);

}  // namespace randgreedi

#endif  // RANDGREEDI_ORACLE_H_
