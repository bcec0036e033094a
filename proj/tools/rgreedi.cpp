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

// Experiment runner for distributed constrained submodular maximization.
//
//   rgreedi run    --config FILE [overrides]   execute an experiment, write
//                                              CSV (and SVG) under --out
//   rgreedi gen    --type random_coverage ...  generate an instance file
//   rgreedi verify [--quick]                   run the bound suites
//
// Exit codes: 0 success, 1 bound-suite failure, 2 usage/config error.

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <string>
#include <vector>

#include "randgreedi/bound_suite.hpp"
#include "randgreedi/experiment.hpp"
#include "randgreedi/instance.hpp"

namespace {

int RunCommand(const std::string& config_path,
               const std::vector<std::pair<std::string, std::string>>&
                   overrides,
               bool plot) {
  randgreedi::ExperimentConfig cfg;
  if (!config_path.empty()) cfg = randgreedi::ParseConfigFile(config_path);
  for (const auto& [key, value] : overrides) {
    randgreedi::ApplyConfigOverride(cfg, key, value);
  }
  randgreedi::ValidateConfig(cfg);

  std::filesystem::create_directories(cfg.output_dir);
  auto rows = randgreedi::RunExperiment(cfg);
  std::string csv_path =
      (std::filesystem::path(cfg.output_dir) / (cfg.experiment + ".csv"))
          .string();
  randgreedi::EmitCsv(rows, csv_path);
  std::printf("wrote %s (%zu rows)\n", csv_path.c_str(), rows.size());
  if (plot && cfg.experiment != "bound_suite") {
    std::string svg_path =
        (std::filesystem::path(cfg.output_dir) / (cfg.experiment + ".svg"))
            .string();
    randgreedi::EmitPlot(rows, svg_path);
    std::printf("wrote %s\n", svg_path.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributed greedy submodular maximization experiments"};
  app.require_subcommand(1);

  // run
  auto* run = app.add_subcommand("run", "run an experiment from a config");
  std::string config_path;
  std::string experiment, k_range, partitions, out_dir;
  int m = -1, trials = -1;
  long long seed = -1;
  std::vector<std::string> sets;
  bool plot = true;
  run->add_option("--config", config_path, "key=value config file");
  run->add_option("--experiment", experiment,
                  "coverage_ratio|exemplar|diversity|matroid_ellipse|"
                  "tight_instance|bound_suite");
  run->add_option("--k-range", k_range, "a:b or comma list");
  run->add_option("--m", m, "number of machines");
  run->add_option("--trials", trials, "seeds per randomized algorithm");
  run->add_option("--seed", seed, "master seed");
  run->add_option("--partitions", partitions,
                  "comma list of random,block,round_robin");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--set", sets, "extra key=value instance parameter")
      ->take_all();
  run->add_flag("!--no-plot", plot, "skip SVG output");

  // gen
  auto* gen = app.add_subcommand("gen", "generate an instance file");
  std::string gen_type = "random_coverage", gen_out = "instance.fimi";
  int gen_sets = 30, gen_universe = 60;
  double gen_density = 0.1;
  long long gen_seed = 1;
  int gen_l = 3;
  gen->add_option("--type", gen_type, "random_coverage|tight");
  gen->add_option("--n-sets", gen_sets, "number of sets");
  gen->add_option("--universe", gen_universe, "universe size");
  gen->add_option("--density", gen_density, "membership probability");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_option("--l", gen_l, "tight-instance parameter");
  gen->add_option("--out", gen_out, "output path (FIMI transactions)");

  // verify
  auto* verify = app.add_subcommand("verify", "run the bound suites");
  bool quick = false;
  verify->add_flag("--quick", quick, "reduced trial counts (smoke run)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      std::vector<std::pair<std::string, std::string>> overrides;
      auto push = [&](const std::string& k, const std::string& v) {
        if (!v.empty()) overrides.emplace_back(k, v);
      };
      push("experiment", experiment);
      push("k_range", k_range);
      if (m >= 0) overrides.emplace_back("m", std::to_string(m));
      if (trials >= 0) overrides.emplace_back("trials", std::to_string(trials));
      if (seed >= 0) overrides.emplace_back("seed", std::to_string(seed));
      push("partitions", partitions);
      push("out", out_dir);
      for (const std::string& kv : sets) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) {
          std::fprintf(stderr, "error: --set expects key=value, got '%s'\n",
                       kv.c_str());
          return 2;
        }
        overrides.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
      }
      return RunCommand(config_path, overrides, plot);
    }

    if (gen->parsed()) {
      randgreedi::Instance inst;
      if (gen_type == "random_coverage") {
        inst = randgreedi::GenRandomCoverage(gen_sets, gen_universe,
                                             gen_density, gen_seed);
      } else if (gen_type == "tight") {
        inst = randgreedi::GenTightInstance(gen_l);
      } else {
        std::fprintf(stderr, "error: unknown gen type '%s'\n",
                     gen_type.c_str());
        return 2;
      }
      const auto* coverage =
          dynamic_cast<const randgreedi::CoverageObjective*>(inst.f.get());
      randgreedi::SaveFimi(*coverage, gen_out);
      std::printf("wrote %s (%d sets)\n", gen_out.c_str(), inst.n);
      return 0;
    }

    randgreedi::BoundSuiteOptions options;
    options.quick = quick;
    int failures =
        randgreedi::ReportBoundSuite(randgreedi::RunBoundSuite(options));
    return failures == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
