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

#include "randgreedi/greedy.hpp"

#include <algorithm>
#include <queue>

#include "randgreedi/rng.hpp"

namespace randgreedi {

namespace {

struct Candidate {
  double gain;
  ElementId id;
  int round;  // round the gain was computed in
};

// Max-heap order: larger gain first, then smaller id.
struct CandidateLess {
  bool operator()(const Candidate& a, const Candidate& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    return a.id > b.id;
  }
};

}  // namespace

GreedyTrace Greedy(const ElementSet& pool, const ValueOracle& f,
                   const ConstraintOracle& c) {
  GreedyTrace trace;
  ElementSet s;
  double value = f.Eval(s);
  ++trace.oracle_calls;

  // Stale gains are upper bounds (submodularity), so popping the heap max,
  // refreshing it, and re-comparing against the next entry yields exactly
  // the naive argmax, including the smallest-id tie-break. Elements that
  // become infeasible are dropped for good: heredity makes infeasibility of
  // s u {e} permanent as s grows.
  std::priority_queue<Candidate, std::vector<Candidate>, CandidateLess> heap;
  for (ElementId e : pool) {
    if (!c.IsFeasible(s.With(e))) continue;
    double g = f.Eval(s.With(e)) - value;
    ++trace.oracle_calls;
    heap.push({g, e, 1});
  }

  int round = 1;
  while (!heap.empty()) {
    Candidate top = heap.top();
    heap.pop();
    if (!c.IsFeasible(s.With(top.id))) continue;
    if (top.round != round) {
      top.gain = f.Eval(s.With(top.id)) - value;
      ++trace.oracle_calls;
      top.round = round;
      heap.push(top);
      continue;
    }
    if (top.gain < 0.0) break;
    s = s.With(top.id);
    value += top.gain;
    trace.picks.emplace_back(top.id, top.gain);
    ++round;
  }

  trace.final_set = s;
  trace.final_value = value;
  return trace;
}

GreedyTrace GreedyNaive(const ElementSet& pool, const ValueOracle& f,
                        const ConstraintOracle& c) {
  GreedyTrace trace;
  ElementSet s;
  double value = f.Eval(s);
  ++trace.oracle_calls;
  std::vector<char> taken(pool.empty() ? 0 : pool.ids().back() + 1, 0);

  while (true) {
    bool found = false;
    double best_gain = 0.0;
    ElementId best_id = -1;
    for (ElementId e : pool) {
      if (taken[e]) continue;
      if (!c.IsFeasible(s.With(e))) continue;
      double g = f.Eval(s.With(e)) - value;
      ++trace.oracle_calls;
      if (!found || g > best_gain) {
        found = true;
        best_gain = g;
        best_id = e;
      }
    }
    if (!found || best_gain < 0.0) break;
    s = s.With(best_id);
    value += best_gain;
    taken[best_id] = 1;
    trace.picks.emplace_back(best_id, best_gain);
  }

  trace.final_set = s;
  trace.final_value = value;
  return trace;
}

std::pair<GreedyTrace, GreedyTrace> RepeatedGreedy(const ElementSet& pool,
                                                   const ValueOracle& f,
                                                   const ConstraintOracle& c) {
  GreedyTrace first = Greedy(pool, f, c);
  GreedyTrace second =
      Greedy(ElementSet::DifferenceOf(pool, first.final_set), f, c);
  return {std::move(first), std::move(second)};
}

ElementSet DoubleGreedyUnconstrained(const ElementSet& pool,
                                     const ValueOracle& f,
                                     std::uint64_t seed) {
  ElementSet x;
  ElementSet y = pool;
  double fx = f.Eval(x);
  double fy = f.Eval(y);
  for (ElementId e : pool) {
    double fxe = f.Eval(x.With(e));
    double fye = f.Eval(y.Without(e));
    double a = std::max(fxe - fx, 0.0);
    double b = std::max(fye - fy, 0.0);
    double p = (a + b == 0.0) ? 1.0 : a / (a + b);
    if (rng::Uniform01(seed, rng::kDoubleGreedy, static_cast<std::uint64_t>(e)) <
        p) {
      x = x.With(e);
      fx = fxe;
    } else {
      y = y.Without(e);
      fy = fye;
    }
  }
  return x;
}

ElementSet NonmonotoneCompose(const ElementSet& pool, const ValueOracle& f,
                              const ConstraintOracle& c, std::uint64_t seed) {
  return internal::NonmonotoneComposeDetail(pool, f, c, seed).best;
}

namespace internal {

ComposeResult NonmonotoneComposeDetail(const ElementSet& pool,
                                       const ValueOracle& f,
                                       const ConstraintOracle& c,
                                       std::uint64_t seed) {
  ComposeResult out;
  auto [t1, t2] = RepeatedGreedy(pool, f, c);
  out.oracle_calls = t1.oracle_calls + t2.oracle_calls;

  ElementSet t3 = DoubleGreedyUnconstrained(t1.final_set, f, seed);
  out.oracle_calls += 2 * (t1.final_set.size() + 1);
  double v3 = f.Eval(t3);
  ++out.oracle_calls;

  out.best = t1.final_set;
  out.best_value = t1.final_value;
  if (t2.final_value > out.best_value) {
    out.best = t2.final_set;
    out.best_value = t2.final_value;
  }
  if (v3 > out.best_value) {
    out.best = t3;
    out.best_value = v3;
  }
  return out;
}

}  // namespace internal

GreedyTrace KnapsackDensityGreedy(const ElementSet& pool, const ValueOracle& f,
                                  const KnapsackConstraint& c) {
  GreedyTrace trace;
  ElementSet s;
  double value = f.Eval(s);
  ++trace.oracle_calls;
  const double empty_value = value;

  // Gain-per-weight greedy, same stopping and tie rules as Greedy.
  while (true) {
    bool found = false;
    double best_density = 0.0;
    double best_gain = 0.0;
    ElementId best_id = -1;
    for (ElementId e : pool) {
      if (s.Contains(e)) continue;
      if (!c.IsFeasible(s.With(e))) continue;
      double g = f.Eval(s.With(e)) - value;
      ++trace.oracle_calls;
      double density = g / c.weights()[e];
      if (!found || density > best_density) {
        found = true;
        best_density = density;
        best_gain = g;
        best_id = e;
      }
    }
    if (!found || best_gain < 0.0) break;
    s = s.With(best_id);
    value += best_gain;
    trace.picks.emplace_back(best_id, best_gain);
  }

  // Compare against the best feasible singleton.
  bool have_singleton = false;
  double best_single_value = 0.0;
  ElementId best_single = -1;
  for (ElementId e : pool) {
    ElementSet single({e});
    if (!c.IsFeasible(single)) continue;
    double v = f.Eval(single);
    ++trace.oracle_calls;
    if (!have_singleton || v > best_single_value) {
      have_singleton = true;
      best_single_value = v;
      best_single = e;
    }
  }
  if (have_singleton && best_single_value > value) {
    trace.picks.clear();
    trace.picks.emplace_back(best_single, best_single_value - empty_value);
    trace.final_set = ElementSet({best_single});
    trace.final_value = best_single_value;
    return trace;
  }

  trace.final_set = s;
  trace.final_value = value;
  return trace;
}

}  // namespace randgreedi
