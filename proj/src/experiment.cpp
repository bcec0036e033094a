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

#include "randgreedi/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "randgreedi/bound_suite.hpp"
#include "randgreedi/distributed.hpp"
#include "randgreedi/verify.hpp"

namespace randgreedi {

namespace {

std::string Trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> Split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(Trim(item));
  return out;
}

const std::set<std::string> kExperiments = {
    "coverage_ratio", "exemplar",       "diversity",
    "matroid_ellipse", "tight_instance", "bound_suite"};

double ParamDouble(const ExperimentConfig& cfg, const std::string& key,
                   double fallback) {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : std::stod(it->second);
}

int ParamInt(const ExperimentConfig& cfg, const std::string& key,
             int fallback) {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : std::stoi(it->second);
}

std::string ParamString(const ExperimentConfig& cfg, const std::string& key,
                        const std::string& fallback) {
  auto it = cfg.params.find(key);
  return it == cfg.params.end() ? fallback : it->second;
}

struct Reference {
  double value = 0.0;
  std::string tag;  // "opt" or "greedy"
};

// Exact optimum when the instance is enumerable (or carries one), otherwise
// the centralized greedy value.
Reference ComputeReference(const Instance& inst) {
  Reference ref;
  if (inst.known_opt.has_value()) {
    ref.value = *inst.known_opt;
    ref.tag = "opt";
  } else if (inst.n <= 24) {
    ref.value = BruteForceOpt(ElementSet::Range(inst.n), *inst.f, *inst.c)
                    .opt_value;
    ref.tag = "opt";
  } else {
    ref.value = Greedy(ElementSet::Range(inst.n), *inst.f, *inst.c).final_value;
    ref.tag = "greedy";
  }
  return ref;
}

double Ratio(double value, double reference) {
  return reference > 0.0 ? value / reference : 1.0;
}

struct RowSink {
  const ExperimentConfig* cfg;
  std::vector<ResultRow>* rows;

  void Add(const Instance& inst, const std::string& algorithm,
           const std::string& partition, int k, int m, const std::string& stat,
           double value, double reference, long long calls, double wall_ms) {
    ResultRow row;
    row.experiment = cfg->experiment;
    row.instance = inst.name;
    row.algorithm = algorithm;
    row.partition = partition;
    row.k = k;
    row.m = m;
    row.stat = stat;
    row.value = value;
    row.ratio = Ratio(value, reference);
    row.oracle_calls = calls;
    row.wall_ms = static_cast<long long>(std::llround(wall_ms));
    rows->push_back(std::move(row));
  }
};

// Centralized greedy, randomized two-round (mean over cfg->trials), and any
// requested fixed-partition deterministic runs for one (instance, k) cell.
void RunStandardCell(const ExperimentConfig& cfg, const Instance& inst, int k,
                     bool include_nm, RowSink& sink) {
  Reference ref = ComputeReference(inst);
  ElementSet ground = ElementSet::Range(inst.n);

  GreedyTrace central = Greedy(ground, *inst.f, *inst.c);
  sink.Add(inst, "greedy", "none", k, 1, "exact/" + ref.tag,
           central.final_value, ref.value, central.oracle_calls, 0.0);

  for (const std::string& strategy : cfg.partition_strategies) {
    if (strategy == "random") {
      long long mean_calls = 0;
      double mean_wall = 0.0;
      auto run = [&](std::uint64_t seed) {
        RunReport r = RandGreeDi(inst, cfg.m, GreedyLastAlg(), seed);
        mean_calls += r.oracle_calls;
        mean_wall += r.wall_ms;
        return r.final_value;
      };
      EstimateReport est = EstimateExpectedValue(
          run, std::max(cfg.trials, 2), cfg.seed);
      sink.Add(inst, "rand_greedi", "random", k, cfg.m,
               "mean" + std::to_string(est.trials) + "/" + ref.tag, est.mean,
               ref.value, mean_calls / est.trials, mean_wall / est.trials);

      if (include_nm) {
        mean_calls = 0;
        mean_wall = 0.0;
        auto nm_run = [&](std::uint64_t seed) {
          RunReport r = NmRandGreeDi(inst, cfg.m, seed);
          mean_calls += r.oracle_calls;
          mean_wall += r.wall_ms;
          return r.final_value;
        };
        EstimateReport nm_est = EstimateExpectedValue(
            nm_run, std::max(cfg.trials, 2), cfg.seed);
        sink.Add(inst, "nm_rand_greedi", "random", k, cfg.m,
                 "mean" + std::to_string(nm_est.trials) + "/" + ref.tag,
                 nm_est.mean, ref.value, mean_calls / nm_est.trials,
                 mean_wall / nm_est.trials);
      }
    } else if (strategy == "block" || strategy == "round_robin") {
      Partition p = PartitionFixed(inst.n, cfg.m,
                                   strategy == "block"
                                       ? FixedStrategy::kBlock
                                       : FixedStrategy::kRoundRobin);
      RunReport r = DetGreeDi(inst, p, GreedyLastAlg());
      sink.Add(inst, "det_greedi", strategy, k, cfg.m, "exact/" + ref.tag,
               r.final_value, ref.value, r.oracle_calls, r.wall_ms);
    } else {
      throw std::invalid_argument("RunExperiment: unknown partition strategy " +
                                  strategy);
    }
  }
}

void RunTightInstance(const ExperimentConfig& cfg, RowSink& sink) {
  std::vector<int> ls = ParseIntRange(ParamString(cfg, "l_range", "2:4"));
  for (int l : ls) {
    Instance inst = GenTightInstance(l);
    const int k = l + l * l;
    Reference ref{*inst.known_opt, "opt"};

    RunReport det = DetGreeDi(inst, *inst.adversarial_partition,
                              GreedyLastAlg());
    sink.Add(inst, "det_greedi", "adversarial", k,
             inst.adversarial_partition->machines, "exact/opt",
             det.final_value, ref.value, det.oracle_calls, det.wall_ms);

    long long mean_calls = 0;
    auto run = [&](std::uint64_t seed) {
      RunReport r = RandGreeDi(inst, inst.adversarial_partition->machines,
                               GreedyLastAlg(), seed);
      mean_calls += r.oracle_calls;
      return r.final_value;
    };
    EstimateReport est =
        EstimateExpectedValue(run, std::max(cfg.trials, 2), cfg.seed);
    sink.Add(inst, "rand_greedi", "random", k,
             inst.adversarial_partition->machines,
             "mean" + std::to_string(est.trials) + "/opt", est.mean, ref.value,
             mean_calls / est.trials, 0.0);
  }
}

void RunBoundSuiteExperiment(const ExperimentConfig& cfg, RowSink& sink) {
  BoundSuiteOptions options;
  options.quick = ParamInt(cfg, "quick", 0) != 0;
  Instance pseudo;
  pseudo.name = "suite";
  for (const CriterionResult& r : RunBoundSuite(options)) {
    sink.Add(pseudo, r.name, "none", 0, 0, "check/bound", r.passed ? 1.0 : 0.0,
             1.0, 0, 0.0);
  }
}

}  // namespace

std::vector<int> ParseIntRange(const std::string& text) {
  std::vector<int> out;
  auto colon = text.find(':');
  if (colon != std::string::npos) {
    int lo = std::stoi(text.substr(0, colon));
    int hi = std::stoi(text.substr(colon + 1));
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  } else {
    for (const std::string& part : Split(text, ',')) {
      if (!part.empty()) out.push_back(std::stoi(part));
    }
  }
  return out;
}

ExperimentConfig ParseConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ParseConfigFile: cannot open " + path);
  ExperimentConfig cfg;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = Trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("ParseConfigFile: expected key=value, got '" +
                               t + "'");
    }
    ApplyConfigOverride(cfg, Trim(t.substr(0, eq)), Trim(t.substr(eq + 1)));
  }
  return cfg;
}

void ApplyConfigOverride(ExperimentConfig& cfg, const std::string& key,
                         const std::string& value) {
  if (key == "experiment") {
    cfg.experiment = value;
  } else if (key == "k_range") {
    cfg.k_range = ParseIntRange(value);
  } else if (key == "m") {
    cfg.m = std::stoi(value);
  } else if (key == "trials") {
    cfg.trials = std::stoi(value);
  } else if (key == "seed") {
    cfg.seed = std::stoull(value);
  } else if (key == "partitions") {
    cfg.partition_strategies = Split(value, ',');
  } else if (key == "out") {
    cfg.output_dir = value;
  } else {
    cfg.params[key] = value;
  }
}

void ValidateConfig(const ExperimentConfig& cfg) {
  if (kExperiments.find(cfg.experiment) == kExperiments.end()) {
    throw std::invalid_argument("ValidateConfig: unknown experiment '" +
                                cfg.experiment + "'");
  }
  if (cfg.k_range.empty()) {
    throw std::invalid_argument("ValidateConfig: k_range is empty");
  }
  if (!std::is_sorted(cfg.k_range.begin(), cfg.k_range.end()) ||
      std::adjacent_find(cfg.k_range.begin(), cfg.k_range.end()) !=
          cfg.k_range.end()) {
    throw std::invalid_argument("ValidateConfig: k_range must be ascending");
  }
  if (cfg.trials < 1) {
    throw std::invalid_argument("ValidateConfig: trials must be >= 1");
  }
  if (cfg.m < 1) {
    throw std::invalid_argument("ValidateConfig: m must be >= 1");
  }
}

std::vector<ResultRow> RunExperiment(const ExperimentConfig& cfg) {
  ValidateConfig(cfg);
  std::vector<ResultRow> rows;
  RowSink sink{&cfg, &rows};

  if (cfg.experiment == "coverage_ratio") {
    std::string fimi = ParamString(cfg, "fimi", "");
    Instance base =
        fimi.empty()
            ? GenRandomCoverage(ParamInt(cfg, "n", 30),
                                ParamInt(cfg, "universe", 60),
                                ParamDouble(cfg, "density", 0.1), cfg.seed)
            : LoadFimi(fimi, 1);
    for (int k : cfg.k_range) {
      RunStandardCell(cfg, WithCardinality(base, k), k, false, sink);
    }
  } else if (cfg.experiment == "exemplar") {
    Instance base = GenExemplar(ParamInt(cfg, "n", 60), ParamInt(cfg, "d", 16),
                                cfg.seed);
    for (int k : cfg.k_range) {
      RunStandardCell(cfg, WithCardinality(base, k), k, false, sink);
    }
  } else if (cfg.experiment == "diversity") {
    int n = ParamInt(cfg, "n", 10);
    for (int k : cfg.k_range) {
      RunStandardCell(cfg, GenDiverseRelevant(n, k, cfg.seed), k, true, sink);
    }
  } else if (cfg.experiment == "matroid_ellipse") {
    Instance base = GenMatroidCoverage(ParamInt(cfg, "facilities", 25),
                                       ParamInt(cfg, "r", 3),
                                       ParamInt(cfg, "grid", 100), cfg.seed);
    for (int k : cfg.k_range) {
      RunStandardCell(cfg, WithCardinality(base, k), k, false, sink);
    }
  } else if (cfg.experiment == "tight_instance") {
    RunTightInstance(cfg, sink);
  } else {
    RunBoundSuiteExperiment(cfg, sink);
  }

  std::sort(rows.begin(), rows.end(), [](const ResultRow& a,
                                         const ResultRow& b) {
    auto key = [](const ResultRow& r) {
      return std::tie(r.experiment, r.instance, r.algorithm, r.partition, r.k,
                      r.stat);
    };
    return key(a) < key(b);
  });
  return rows;
}

namespace {

std::string FormatDouble(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

}  // namespace

void EmitCsv(const std::vector<ResultRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("EmitCsv: no rows");
  std::ofstream out(path);
  if (!out) throw std::runtime_error("EmitCsv: cannot open " + path);
  out << "experiment,instance,algorithm,partition,k,m,stat,value,ratio,"
         "oracle_calls,wall_ms\n";
  for (const ResultRow& r : rows) {
    out << r.experiment << ',' << r.instance << ',' << r.algorithm << ','
        << r.partition << ',' << r.k << ',' << r.m << ',' << r.stat << ','
        << FormatDouble(r.value, "%.10g") << ','
        << FormatDouble(r.ratio, "%.6g") << ',' << r.oracle_calls << ','
        << r.wall_ms << '\n';
  }
  if (!out) throw std::runtime_error("EmitCsv: write failed for " + path);
}

std::vector<ResultRow> ParseCsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ParseCsv: cannot open " + path);
  std::string header;
  std::getline(in, header);
  std::vector<ResultRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    auto cells = Split(line, ',');
    if (cells.size() != 11) {
      throw std::runtime_error("ParseCsv: malformed row '" + line + "'");
    }
    ResultRow r;
    r.experiment = cells[0];
    r.instance = cells[1];
    r.algorithm = cells[2];
    r.partition = cells[3];
    r.k = std::stoi(cells[4]);
    r.m = std::stoi(cells[5]);
    r.stat = cells[6];
    r.value = std::stod(cells[7]);
    r.ratio = std::stod(cells[8]);
    r.oracle_calls = std::stoll(cells[9]);
    r.wall_ms = std::stoll(cells[10]);
    rows.push_back(std::move(r));
  }
  return rows;
}

namespace {

std::string XmlEscape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

void EmitPlot(const std::vector<ResultRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("EmitPlot: no rows");
  for (const ResultRow& r : rows) {
    if (r.experiment != rows.front().experiment) {
      throw std::invalid_argument("EmitPlot: rows mix experiments");
    }
  }

  // Series keyed by (algorithm, partition); points sorted by k.
  std::map<std::string, std::vector<std::pair<int, double>>> series;
  int k_min = rows.front().k, k_max = rows.front().k;
  double y_max = 0.0;
  for (const ResultRow& r : rows) {
    series[r.algorithm + "(" + r.partition + ")"].emplace_back(r.k, r.ratio);
    k_min = std::min(k_min, r.k);
    k_max = std::max(k_max, r.k);
    y_max = std::max(y_max, r.ratio);
  }
  if (y_max <= 0.0) y_max = 1.0;
  y_max = std::max(y_max, 1.0);

  const double width = 640, height = 420;
  const double left = 60, right = 610, top = 30, bottom = 370;
  auto sx = [&](double k) {
    if (k_max == k_min) return (left + right) / 2.0;
    return left + (k - k_min) / double(k_max - k_min) * (right - left);
  };
  auto sy = [&](double ratio) {
    return bottom - ratio / y_max * (bottom - top);
  };

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#17becf"};
  std::ofstream out(path);
  if (!out) throw std::runtime_error("EmitPlot: cannot open " + path);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";
  // axes
  out << "  <line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right
      << "\" y2=\"" << bottom << "\" stroke=\"black\"/>\n";
  out << "  <line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << left
      << "\" y2=\"" << top << "\" stroke=\"black\"/>\n";
  out << "  <text x=\"" << (left + right) / 2 << "\" y=\"" << bottom + 35
      << "\" text-anchor=\"middle\">k</text>\n";
  out << "  <text x=\"" << left - 45 << "\" y=\"" << (top + bottom) / 2
      << "\" transform=\"rotate(-90 " << left - 45 << " " << (top + bottom) / 2
      << ")\" text-anchor=\"middle\">ratio</text>\n";
  out << "  <text x=\"" << left << "\" y=\"" << bottom + 18
      << "\" text-anchor=\"middle\">" << k_min << "</text>\n";
  out << "  <text x=\"" << right << "\" y=\"" << bottom + 18
      << "\" text-anchor=\"middle\">" << k_max << "</text>\n";
  out << "  <text x=\"" << left - 8 << "\" y=\"" << sy(y_max) + 4
      << "\" text-anchor=\"end\">" << FormatDouble(y_max, "%.3g")
      << "</text>\n";
  out << "  <text x=\"" << left - 8 << "\" y=\"" << bottom + 4
      << "\" text-anchor=\"end\">0</text>\n";

  int idx = 0;
  for (auto& [label, points] : series) {
    std::sort(points.begin(), points.end());
    const char* color = kPalette[idx % 7];
    out << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) out << ' ';
      out << FormatDouble(sx(points[i].first), "%.2f") << ','
          << FormatDouble(sy(points[i].second), "%.2f");
    }
    out << "\"/>\n";
    double ly = top + 16.0 * idx;
    out << "  <line x1=\"" << right - 150 << "\" y1=\"" << ly << "\" x2=\""
        << right - 130 << "\" y2=\"" << ly << "\" stroke=\"" << color
        << "\" stroke-width=\"1.5\"/>\n";
    out << "  <text x=\"" << right - 125 << "\" y=\"" << ly + 4
        << "\" font-size=\"11\">" << XmlEscape(label) << "</text>\n";
    ++idx;
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("EmitPlot: write failed for " + path);
}

}  // namespace randgreedi
