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

#include "randgreedi/bound_suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "randgreedi/distributed.hpp"
#include "randgreedi/experiment.hpp"
#include "randgreedi/lovasz.hpp"
#include "randgreedi/rng.hpp"
#include "randgreedi/verify.hpp"

namespace randgreedi {

namespace {

constexpr double kEulerAlpha = 0.6321205588285577;  // 1 - 1/e
constexpr double kTol = 1e-9;

std::string Fmt(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Tracks the deterministic two-round ratio floor across every cardinality
// instance/partition pair the other criteria exercise.
struct AppendixATracker {
  long long pairs = 0;
  long long violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();

  void Record(double ratio, int k) {
    double bound = kEulerAlpha / (2.0 * std::sqrt(double(k)));
    ++pairs;
    if (ratio < bound - kTol) ++violations;
    min_margin = std::min(min_margin, ratio - bound);
  }
};

// Symmetric U(0,100) similarity with zero diagonal and lambda = 1: the
// cut-style objective, non-negative on every subset and non-monotone.
Instance GenCutInstance(int n, std::uint64_t seed) {
  Eigen::MatrixXd sim = Eigen::MatrixXd::Zero(n, n);
  std::uint64_t counter = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double v = 100.0 * rng::Uniform01(seed, rng::kInstanceGen, counter++);
      sim(i, j) = v;
      sim(j, i) = v;
    }
  }
  Instance inst;
  inst.name = "cut_n" + std::to_string(n);
  inst.n = n;
  inst.f = std::make_shared<DiversityObjective>(std::move(sim), 1.0);
  inst.c = std::make_shared<CardinalityConstraint>(n);
  return inst;
}

Instance RandomMatroidInstance(int n, int universe, double density, int blocks,
                               int capacity, std::uint64_t seed) {
  Instance inst = GenRandomCoverage(n, universe, density, seed);
  std::vector<int> part_of(n);
  for (int e = 0; e < n; ++e) {
    part_of[e] = rng::UniformInt(seed ^ 0x51ed2701, rng::kInstanceGen, e, blocks);
  }
  inst.c = std::make_shared<PartitionMatroid>(
      std::move(part_of), std::vector<int>(blocks, capacity));
  inst.name += "_matroid";
  return inst;
}

Instance RandomPSystemInstance(int n, int universe, double density, int blocks,
                               int k, std::uint64_t seed) {
  Instance inst = RandomMatroidInstance(n, universe, density, blocks, 1, seed);
  inst.c = std::make_shared<PSystemConstraint>(
      std::vector<std::shared_ptr<const ConstraintOracle>>{
          std::make_shared<CardinalityConstraint>(k), inst.c});
  inst.name += "_p2";
  return inst;
}

// --------------------------------------------------------------------------
// Criterion 1: centralized greedy vs exact optimum on random coverage.

CriterionResult Criterion1(bool quick) {
  Timer timer;
  const int count = quick ? 40 : 200;
  int violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    int n = 8 + i % 7;
    int universe = 12 + i % 9;
    double density = 0.15 + 0.02 * (i % 8);
    int k = 1 + i % 4;
    Instance inst =
        WithCardinality(GenRandomCoverage(n, universe, density, 1000 + i), k);
    ElementSet ground = ElementSet::Range(inst.n);
    double greedy_value = Greedy(ground, *inst.f, *inst.c).final_value;
    double opt = BruteForceOpt(ground, *inst.f, *inst.c).opt_value;
    if (opt > 0.0) worst = std::min(worst, greedy_value / opt);
    if (greedy_value < kEulerAlpha * opt - kTol) ++violations;
  }
  CriterionResult r;
  r.index = 1;
  r.name = "greedy_centralized_bound";
  r.wall_s = timer.Seconds();
  r.passed = violations == 0 && r.wall_s < 30.0;
  r.detail = Fmt("%d instances, %d violations, worst ratio %.4f, %.1fs", count,
                 violations, worst, r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 2: two-round randomized mean >= (alpha/2) OPT - 3 SE.

CriterionResult Criterion2(bool quick, AppendixATracker* appendix_a) {
  Timer timer;
  const int trials = quick ? 60 : 500;
  const int per_class = quick ? 3 : 10;

  struct Case {
    Instance inst;
    double alpha;
    bool cardinality;
    int k;
  };
  std::vector<Case> cases;
  for (int i = 0; i < per_class; ++i) {
    int n = 10 + i % 7;
    int k = 2 + i % 3;
    Instance inst = WithCardinality(
        GenRandomCoverage(n, 14 + i, 0.2 + 0.02 * i, 2000 + i), k);
    cases.push_back({inst, kEulerAlpha, true, k});
  }
  for (int i = 0; i < per_class; ++i) {
    int n = 10 + i % 7;
    cases.push_back({RandomMatroidInstance(n, 16, 0.25, 3 + i % 3, 1 + i % 2,
                                           2100 + i),
                     0.5, false, 0});
  }
  for (int i = 0; i < per_class; ++i) {
    int n = 10 + i % 7;
    int k = 2 + i % 3;
    cases.push_back(
        {RandomPSystemInstance(n, 16, 0.25, 4 + i % 2, k, 2200 + i),
         1.0 / 3.0, false, k});
  }

  int failures = 0;
  double min_margin_se = std::numeric_limits<double>::infinity();
  for (const Case& c : cases) {
    double opt =
        BruteForceOpt(ElementSet::Range(c.inst.n), *c.inst.f, *c.inst.c)
            .opt_value;
    OptResult opt_result;
    opt_result.opt_value = opt;
    for (int m : {2, 4}) {
      auto run = [&](std::uint64_t seed) {
        RunReport rep = RandGreeDi(c.inst, m, GreedyLastAlg(), seed);
        if (c.cardinality && opt > 0.0 && appendix_a != nullptr) {
          appendix_a->Record(rep.final_value / opt, c.k);
        }
        return rep.final_value;
      };
      EstimateReport est = EstimateExpectedValue(run, trials, 77 + m);
      if (!CheckTheoremBound(est, opt_result, c.alpha / 2.0)) ++failures;
      if (est.std_error > 0.0) {
        min_margin_se =
            std::min(min_margin_se,
                     (est.mean - c.alpha / 2.0 * opt) / est.std_error);
      }
    }
  }

  CriterionResult r;
  r.index = 2;
  r.name = "rand_two_round_monotone_bound";
  r.wall_s = timer.Seconds();
  r.passed = failures == 0 && r.wall_s < 300.0;
  r.detail = Fmt("%zu (instance,m) checks, %d failures, min margin %.1f SE, %.1fs",
                 cases.size() * 2, failures, min_margin_se, r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 3: non-monotone two-round mean >= 0.12 OPT - 3 SE.

CriterionResult Criterion3(bool quick) {
  Timer timer;
  const int trials = quick ? 60 : 500;
  const int count = quick ? 5 : 20;
  int failures = 0;
  double min_margin_se = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    int n = 8 + i % 5;
    int k = 2 + i % 2;
    Instance inst = GenDiverseRelevant(n, k, 3000 + i);
    OptResult opt =
        BruteForceOpt(ElementSet::Range(n), *inst.f, *inst.c);
    auto run = [&](std::uint64_t seed) {
      return NmRandGreeDi(inst, 2, seed).final_value;
    };
    EstimateReport est = EstimateExpectedValue(run, trials, 88 + i);
    if (!CheckTheoremBound(est, opt, 0.12)) ++failures;
    if (est.std_error > 0.0) {
      min_margin_se = std::min(
          min_margin_se, (est.mean - 0.12 * opt.opt_value) / est.std_error);
    }
  }
  CriterionResult r;
  r.index = 3;
  r.name = "nm_two_round_bound";
  r.wall_s = timer.Seconds();
  r.passed = failures == 0 && r.wall_s < 300.0;
  r.detail = Fmt("%d instances, %d failures, min margin %.1f SE, %.1fs", count,
                 failures, min_margin_se, r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 4: greedy retention property by full enumeration.

CriterionResult Criterion4(bool quick) {
  Timer timer;
  const int count = quick ? 10 : 50;
  int failures = 0;
  double worst_card = 1e9, worst_mat = 1e9, worst_p2 = 1e9;

  for (int i = 0; i < count; ++i) {
    int n = 10 + 2 * (i % 2);
    Instance inst = WithCardinality(
        GenRandomCoverage(n, 18, 0.32, 4000 + i), n / 2);
    auto [ok, worst] =
        CheckGp(*inst.f, *inst.c, ElementSet::Range(n), kEulerAlpha);
    worst_card = std::min(worst_card, worst);
    if (!ok) ++failures;
  }
  for (int i = 0; i < count; ++i) {
    Instance inst = RandomMatroidInstance(10, 18, 0.3, 4, 1, 4200 + i);
    auto [ok, worst] = CheckGp(*inst.f, *inst.c, ElementSet::Range(10), 0.5);
    worst_mat = std::min(worst_mat, worst);
    if (!ok) ++failures;
  }
  for (int i = 0; i < count; ++i) {
    Instance inst = RandomPSystemInstance(10, 18, 0.3, 5, 3, 4400 + i);
    auto [ok, worst] =
        CheckGp(*inst.f, *inst.c, ElementSet::Range(10), 1.0 / 3.0);
    worst_p2 = std::min(worst_p2, worst);
    if (!ok) ++failures;
  }

  CriterionResult r;
  r.index = 4;
  r.name = "greedy_retention_property";
  r.wall_s = timer.Seconds();
  r.passed = failures == 0;
  r.detail = Fmt(
      "%d instances/class, %d failures; worst ratios card %.4f (>=0.632), "
      "matroid %.4f (>=0.5), p2 %.4f (>=0.333), %.1fs",
      count, failures, worst_card, worst_mat, worst_p2, r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 5: rejected-element exactness.

CriterionResult Criterion5(bool quick) {
  Timer timer;
  const int count = quick ? 100 : 500;
  int failures = 0;
  long long nontrivial = 0;
  for (int i = 0; i < count; ++i) {
    Instance inst =
        WithCardinality(GenRandomCoverage(12, 16, 0.25, 5000 + i), 3);
    const ElementSet ground = ElementSet::Range(12);
    std::vector<ElementId> a_ids;
    for (ElementId e : ground) {
      if (rng::Uniform01(6000 + i, rng::kSampling, e) < 0.5) a_ids.push_back(e);
    }
    ElementSet a(std::move(a_ids));
    ElementSet g_a = Greedy(a, *inst.f, *inst.c).final_set;

    std::vector<ElementId> b_ids;
    for (ElementId e : ElementSet::DifferenceOf(ground, a)) {
      if (Greedy(a.With(e), *inst.f, *inst.c).final_set == g_a) {
        b_ids.push_back(e);
      }
    }
    ElementSet b(std::move(b_ids));
    if (!b.empty()) ++nontrivial;
    ElementSet g_ab =
        Greedy(ElementSet::UnionOf(a, b), *inst.f, *inst.c).final_set;
    if (!(g_ab == g_a)) ++failures;
  }
  CriterionResult r;
  r.index = 5;
  r.name = "rejected_elements_exactness";
  r.wall_s = timer.Seconds();
  r.passed = failures == 0;
  r.detail = Fmt("%d cases (%lld with nonempty B), %d failures, %.1fs", count,
                 nontrivial, failures, r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 6: hard family for the deterministic partition.

CriterionResult Criterion6(bool quick, AppendixATracker* appendix_a) {
  Timer timer;
  const int trials = quick ? 40 : 200;
  bool passed = true;
  std::string detail;
  for (int l = 2; l <= 5; ++l) {
    Instance inst = GenTightInstance(l);
    const int k = l + l * l;
    const double opt = *inst.known_opt;
    RunReport det =
        DetGreeDi(inst, *inst.adversarial_partition, GreedyLastAlg());
    double det_ratio = det.final_value / opt;
    if (appendix_a != nullptr) appendix_a->Record(det_ratio, k);

    double cap = 2.0 * l * l;
    bool coverage_ok = det.final_value <= cap;
    if (!coverage_ok) passed = false;

    double mean_ratio = 0.0;
    if (l >= 3) {
      auto run = [&](std::uint64_t seed) {
        RunReport rep = RandGreeDi(inst, inst.adversarial_partition->machines,
                                   GreedyLastAlg(), seed);
        if (appendix_a != nullptr) appendix_a->Record(rep.final_value / opt, k);
        return rep.final_value / opt;
      };
      EstimateReport est = EstimateExpectedValue(run, trials, 66 + l);
      mean_ratio = est.mean;
      if (!(mean_ratio > det_ratio)) passed = false;
    }

    detail += Fmt("l=%d det=%.0f cap=%.0f ratio=%.3f rand=%.3f; ", l,
                  det.final_value, cap, det_ratio, mean_ratio);
  }
  CriterionResult r;
  r.index = 6;
  r.name = "tight_family_det_vs_rand";
  r.wall_s = timer.Seconds();
  r.passed = passed && r.wall_s < 120.0;
  r.detail = detail + Fmt("%.1fs", r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 7: deterministic floor over every exercised cardinality pair.

CriterionResult Criterion7(const AppendixATracker& tracker) {
  CriterionResult r;
  r.index = 7;
  r.name = "two_round_ratio_floor";
  r.passed = tracker.pairs > 0 && tracker.violations == 0;
  r.detail = Fmt("%lld pairs, %lld violations, min margin %.4f",
                 tracker.pairs, tracker.violations, tracker.min_margin);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 8: Lovasz extension properties.

CriterionResult Criterion8(bool quick) {
  Timer timer;
  std::vector<Instance> instances;
  for (int i = 0; i < 8; ++i) {
    instances.push_back(GenRandomCoverage(8 + i % 3, 12, 0.3, 8100 + i));
  }
  for (int i = 0; i < 4; ++i) {
    Eigen::VectorXd w(10);
    for (int j = 0; j < 10; ++j) {
      w[j] = 10.0 * rng::Uniform01(8200 + i, rng::kInstanceGen, j);
    }
    Instance inst;
    inst.name = "modular";
    inst.n = 10;
    inst.f = std::make_shared<ModularObjective>(w);
    inst.c = std::make_shared<CardinalityConstraint>(10);
    instances.push_back(inst);
  }
  for (int i = 0; i < 4; ++i) instances.push_back(GenExemplar(9, 8, 8300 + i));
  for (int i = 0; i < 4; ++i) instances.push_back(GenCutInstance(9, 8400 + i));

  // (a) indicator property on every subset of every instance.
  int indicator_failures = 0;
  for (const Instance& inst : instances) {
    const int n = inst.n;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      std::vector<ElementId> ids;
      WeightVector x = WeightVector::Zero(n);
      for (int e = 0; e < n; ++e) {
        if (mask & (1ULL << e)) {
          ids.push_back(e);
          x[e] = 1.0;
        }
      }
      ElementSet s(std::move(ids));
      if (std::abs(LovaszExtension(*inst.f, x) - inst.f->Eval(s)) > 1e-12) {
        ++indicator_failures;
      }
    }
  }

  // (b) scaling property on 1e4 random (x, c) pairs.
  const int scaling_pairs = quick ? 1000 : 10000;
  int scaling_failures = 0;
  for (int t = 0; t < scaling_pairs; ++t) {
    const Instance& inst = instances[t % instances.size()];
    WeightVector x(inst.n);
    for (int e = 0; e < inst.n; ++e) {
      x[e] = rng::Uniform01(8500, rng::kSampling,
                            static_cast<std::uint64_t>(t) * 64 + e);
    }
    double c = rng::Uniform01(8501, rng::kSampling, t);
    if (!CheckLovaszScaling(*inst.f, x, c)) ++scaling_failures;
  }

  // (c) random-set lower bound: mean f(S) >= c f-(p) - 3 SE with
  // S containing e independently with probability c*p_e.
  const int draws = quick ? 2000 : 10000;
  int lemma_failures = 0;
  for (int i = 0; i < 3; ++i) {
    Instance inst = GenRandomCoverage(10, 14, 0.3, 8600 + i);
    WeightVector p(inst.n);
    for (int e = 0; e < inst.n; ++e) {
      p[e] = rng::Uniform01(8700 + i, rng::kSampling, e);
    }
    const double c = 0.6;
    double target = c * LovaszExtension(*inst.f, p);
    auto run = [&](std::uint64_t seed) {
      std::vector<ElementId> ids;
      for (int e = 0; e < inst.n; ++e) {
        if (rng::Uniform01(seed, rng::kSampling, e) < c * p[e]) {
          ids.push_back(e);
        }
      }
      return inst.f->Eval(ElementSet(std::move(ids)));
    };
    EstimateReport est = EstimateExpectedValue(run, draws, 8800 + i);
    if (est.mean < target - 3.0 * est.std_error) ++lemma_failures;
  }

  CriterionResult r;
  r.index = 8;
  r.name = "lovasz_extension_properties";
  r.wall_s = timer.Seconds();
  r.passed =
      indicator_failures == 0 && scaling_failures == 0 && lemma_failures == 0;
  r.detail = Fmt(
      "indicator failures %d (20 instances, all subsets), scaling failures "
      "%d/%d, random-set failures %d/3, %.1fs",
      indicator_failures, scaling_failures, scaling_pairs, lemma_failures,
      r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 9: double greedy expectation on non-monotone instances.

CriterionResult Criterion9(bool quick) {
  Timer timer;
  const int runs = quick ? 300 : 2000;
  const int count = quick ? 5 : 20;
  int failures = 0;
  double min_margin_se = std::numeric_limits<double>::infinity();
  for (int i = 0; i < count; ++i) {
    int n = 8 + i % 5;
    Instance inst = GenCutInstance(n, 9000 + i);
    ElementSet ground = ElementSet::Range(n);
    OptResult opt = BruteForceOpt(ground, *inst.f, *inst.c);
    auto run = [&](std::uint64_t seed) {
      return inst.f->Eval(DoubleGreedyUnconstrained(ground, *inst.f, seed));
    };
    EstimateReport est = EstimateExpectedValue(run, runs, 9100 + i);
    if (!CheckTheoremBound(est, opt, 0.5)) ++failures;
    if (est.std_error > 0.0) {
      min_margin_se = std::min(
          min_margin_se, (est.mean - 0.5 * opt.opt_value) / est.std_error);
    }
  }
  CriterionResult r;
  r.index = 9;
  r.name = "double_greedy_half_bound";
  r.wall_s = timer.Seconds();
  r.passed = failures == 0;
  r.detail = Fmt("%d instances x %d runs, %d failures, min margin %.1f SE, %.1fs",
                 count, runs, failures, min_margin_se, r.wall_s);
  return r;
}

// --------------------------------------------------------------------------
// Criterion 10: single-machine collapse and byte-identical CSV.

CriterionResult Criterion10(bool quick) {
  Timer timer;
  const int count = quick ? 10 : 50;
  int collapse_failures = 0;
  for (int i = 0; i < count; ++i) {
    Instance inst;
    switch (i % 4) {
      case 0:
        inst = WithCardinality(GenRandomCoverage(8 + i % 5, 14, 0.3, 10000 + i),
                               2 + i % 3);
        break;
      case 1: {
        Eigen::VectorXd w(10);
        for (int j = 0; j < 10; ++j) {
          w[j] = 5.0 * rng::Uniform01(10100 + i, rng::kInstanceGen, j);
        }
        inst.name = "modular";
        inst.n = 10;
        inst.f = std::make_shared<ModularObjective>(w);
        inst.c = std::make_shared<CardinalityConstraint>(3);
        break;
      }
      case 2:
        inst = WithCardinality(GenExemplar(8, 6, 10200 + i), 2);
        break;
      default:
        inst = GenDiverseRelevant(9, 2, 10300 + i);
    }
    GreedyTrace central = Greedy(ElementSet::Range(inst.n), *inst.f, *inst.c);
    RunReport rep = RandGreeDi(inst, 1, GreedyLastAlg(), 123 + i);
    if (!(rep.final_set == central.final_set) ||
        rep.final_value != central.final_value) {
      ++collapse_failures;
    }
  }

  // Same config, two runs, byte-identical files.
  ExperimentConfig cfg;
  cfg.experiment = "coverage_ratio";
  cfg.params["n"] = "10";
  cfg.params["universe"] = "15";
  cfg.params["density"] = "0.3";
  cfg.k_range = {1, 2, 3};
  cfg.m = 2;
  cfg.trials = 20;
  cfg.seed = 7;
  auto tmp = std::filesystem::temp_directory_path();
  auto path_a = (tmp / "rgreedi_det_a.csv").string();
  auto path_b = (tmp / "rgreedi_det_b.csv").string();
  EmitCsv(RunExperiment(cfg), path_a);
  EmitCsv(RunExperiment(cfg), path_b);
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  bool csv_identical = slurp(path_a) == slurp(path_b);

  CriterionResult r;
  r.index = 10;
  r.name = "determinism_and_collapse";
  r.wall_s = timer.Seconds();
  r.passed = collapse_failures == 0 && csv_identical;
  r.detail = Fmt("%d collapse checks, %d failures; csv %s, %.1fs", count,
                 collapse_failures, csv_identical ? "identical" : "DIFFERS",
                 r.wall_s);
  return r;
}

}  // namespace

std::vector<CriterionResult> RunBoundSuite(const BoundSuiteOptions& options) {
  const bool quick = options.quick;
  AppendixATracker appendix_a;
  std::vector<CriterionResult> results;
  results.push_back(Criterion1(quick));
  results.push_back(Criterion2(quick, &appendix_a));
  results.push_back(Criterion3(quick));
  results.push_back(Criterion4(quick));
  results.push_back(Criterion5(quick));
  results.push_back(Criterion6(quick, &appendix_a));
  results.push_back(Criterion7(appendix_a));
  results.push_back(Criterion8(quick));
  results.push_back(Criterion9(quick));
  results.push_back(Criterion10(quick));
  return results;
}

int ReportBoundSuite(const std::vector<CriterionResult>& results) {
  int failures = 0;
  for (const CriterionResult& r : results) {
    if (!r.passed) ++failures;
    std::printf("[%s] criterion %d (%s): %s\n", r.passed ? "PASS" : "FAIL",
                r.index, r.name.c_str(), r.detail.c_str());
  }
  std::fflush(stdout);
  return failures;
}

}  // namespace randgreedi
