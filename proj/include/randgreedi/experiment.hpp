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

#ifndef RANDGREEDI_EXPERIMENT_H_
#define RANDGREEDI_EXPERIMENT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace randgreedi {

// Flat key=value experiment description. Instance-specific knobs live in
// `params`; command-line flags override file values key by key.
struct ExperimentConfig {
  std::string experiment;
  std::map<std::string, std::string> params;
  std::vector<int> k_range = {1, 2, 3};
  int m = 2;
  int trials = 20;
  std::uint64_t seed = 42;
  std::vector<std::string> partition_strategies = {"random", "block",
                                                   "round_robin"};
  std::string output_dir = ".";
};

// "a:b" (inclusive) or comma-separated list.
std::vector<int> ParseIntRange(const std::string& text);

// key=value lines, '#' comments, blank lines ignored.
ExperimentConfig ParseConfigFile(const std::string& path);

// Applies one key=value override (same keys as the file format).
void ApplyConfigOverride(ExperimentConfig& cfg, const std::string& key,
                         const std::string& value);

// Rejects unknown experiment tags, empty or non-ascending k_range, trials < 1.
void ValidateConfig(const ExperimentConfig& cfg);

struct ResultRow {
  std::string experiment;
  std::string instance;
  std::string algorithm;
  std::string partition;
  int k = 0;
  int m = 0;
  std::string stat;  // "<exact|seedN|meanN>/<opt|greedy|bound>"
  double value = 0.0;
  double ratio = 0.0;
  long long oracle_calls = 0;
  long long wall_ms = 0;  // rounded to whole milliseconds
};

// Executes the configured experiment; rows come back sorted by
// (experiment, instance, algorithm, partition, k, stat) so output never
// depends on execution schedule.
std::vector<ResultRow> RunExperiment(const ExperimentConfig& cfg);

// Header: experiment,instance,algorithm,partition,k,m,stat,value,ratio,
// oracle_calls,wall_ms. Ratio carries 6 significant digits; plain decimal
// points throughout; newline-terminated. Rejects empty row lists.
void EmitCsv(const std::vector<ResultRow>& rows, const std::string& path);

// Round-trip reader for emitted files.
std::vector<ResultRow> ParseCsv(const std::string& path);

// Minimal SVG line chart of ratio vs k, one polyline per
// (algorithm, partition) series. All rows must share one experiment tag.
void EmitPlot(const std::vector<ResultRow>& rows, const std::string& path);

}  // namespace randgreedi

#endif  // RANDGREEDI_EXPERIMENT_H_
