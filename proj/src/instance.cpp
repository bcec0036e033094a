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

#include "randgreedi/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "randgreedi/rng.hpp"

namespace randgreedi {

Instance WithCardinality(const Instance& inst, int k) {
  Instance out = inst;
  auto card = std::make_shared<CardinalityConstraint>(k);
  if (!inst.c || inst.c->Kind() == ConstraintKind::kCardinality) {
    out.c = card;
  } else {
    out.c = std::make_shared<PSystemConstraint>(
        std::vector<std::shared_ptr<const ConstraintOracle>>{card, inst.c});
  }
  return out;
}

Instance GenTightInstance(int l) {
  if (l < 2) throw std::invalid_argument("GenTightInstance: l must be >= 2");
  const int k = l + l * l;
  const int universe = l * l + l * l * l;

  std::vector<std::vector<int>> sets;
  std::vector<int> machine;
  auto add = [&](std::vector<int> items, int m) {
    sets.push_back(std::move(items));
    machine.push_back(m);
  };
  auto block = [&](int first, int count) {
    std::vector<int> items(count);
    for (int i = 0; i < count; ++i) items[i] = first + i;
    return items;
  };

  // Machine 0: the l base blocks O_1..O_l covering {0..l^2-1}, then padding.
  for (int j = 0; j < l; ++j) add(block(j * l, l), 0);
  for (int i = 0; i < k; ++i) add({}, 0);

  // Machine t+1 (t = 0..l^2-1): l decoys (O_j plus one item of block t),
  // padding, and the machine's own optimal block last so greedy's zero-gain
  // picks land on padding.
  for (int t = 0; t < l * l; ++t) {
    const int m = t + 1;
    for (int j = 0; j < l; ++j) {
      std::vector<int> decoy = block(j * l, l);
      decoy.push_back(l * l + t * l + j);
      add(std::move(decoy), m);
    }
    for (int i = 0; i < k; ++i) add({}, m);
    add(block(l * l + t * l, l), m);
  }

  Instance inst;
  inst.name = "tight_l" + std::to_string(l);
  inst.n = static_cast<int>(sets.size());
  inst.f = std::make_shared<CoverageObjective>(universe, std::move(sets));
  inst.c = std::make_shared<CardinalityConstraint>(k);
  inst.known_opt = static_cast<double>(universe);
  inst.adversarial_partition = PartitionExplicit(std::move(machine), 1 + l * l);
  return inst;
}

Instance GenDiverseRelevant(int n, int k, std::uint64_t seed) {
  if (n < k || k < 1) {
    throw std::invalid_argument("GenDiverseRelevant: need n >= k >= 1");
  }
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
  inst.name = "diverse_n" + std::to_string(n) + "_k" + std::to_string(k);
  inst.n = n;
  inst.f = std::make_shared<DiversityObjective>(
      std::move(sim), static_cast<double>(n) / static_cast<double>(k));
  inst.c = std::make_shared<CardinalityConstraint>(k);
  return inst;
}

Instance GenMatroidCoverage(int n_facilities, int r, int demand_grid,
                            std::uint64_t seed) {
  if (n_facilities < 1 || r < 1 || demand_grid < 1) {
    throw std::invalid_argument("GenMatroidCoverage: parameters must be >= 1");
  }
  const int n_points = demand_grid * demand_grid;
  const int n_ellipses = n_facilities * r;

  // Facility lattice inside the unit square.
  int side = static_cast<int>(std::ceil(std::sqrt(double(n_facilities))));
  std::vector<std::pair<double, double>> facility(n_facilities);
  for (int i = 0; i < n_facilities; ++i) {
    facility[i] = {(i % side + 0.5) / side, (i / side + 0.5) / side};
  }

  std::vector<std::vector<int>> covered(n_ellipses);
  std::vector<int> part_of(n_ellipses);
  for (int idx = 0; idx < n_ellipses; ++idx) {
    int fac = idx / r;
    part_of[idx] = fac;
    // Major axis 0.1*len, minor axis 0.1/len, rotated by rho;
    // len ~ N(3, 1/3), rho ~ U(0, 2pi). len clamped away from zero so the
    // ellipse stays well-formed on extreme draws.
    double len =
        3.0 + rng::Normal(seed, rng::kInstanceGen, idx) * std::sqrt(1.0 / 3.0);
    if (len < 0.2) len = 0.2;
    double a = 0.05 * len;
    double b = 0.05 / len;
    double rho =
        2.0 * 3.14159265358979323846 *
        rng::Uniform01(seed, rng::kInstanceGen, 2 * n_ellipses + idx);
    double cr = std::cos(rho), sr = std::sin(rho);
    auto [cx, cy] = facility[fac];
    for (int p = 0; p < n_points; ++p) {
      double px = (p % demand_grid + 0.5) / demand_grid - cx;
      double py = (p / demand_grid + 0.5) / demand_grid - cy;
      double u = (px * cr + py * sr) / a;
      double v = (-px * sr + py * cr) / b;
      if (u * u + v * v <= 1.0) covered[idx].push_back(p);
    }
  }

  Instance inst;
  inst.name = "ellipse_f" + std::to_string(n_facilities) + "_r" +
              std::to_string(r);
  inst.n = n_ellipses;
  inst.f = std::make_shared<CoverageObjective>(n_points, std::move(covered));
  inst.c = std::make_shared<PartitionMatroid>(
      std::move(part_of), std::vector<int>(n_facilities, 1));
  return inst;
}

namespace {

double NormalDraw(std::uint64_t seed, std::uint64_t counter) {
  return rng::Normal(seed, rng::kInstanceGen, counter);
}

}  // namespace

Instance LoadFimi(const std::string& path, int k) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("LoadFimi: cannot open " + path);

  std::vector<std::vector<int>> sets;
  std::vector<long long> labels;
  std::unordered_map<long long, int> dense;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::vector<int> items;
    std::string tok;
    while (ss >> tok) {
      long long label = 0;
      std::size_t used = 0;
      try {
        label = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || label <= 0) {
        throw std::runtime_error("LoadFimi: malformed token '" + tok +
                                 "' at line " + std::to_string(line_no));
      }
      auto [it, inserted] =
          dense.emplace(label, static_cast<int>(labels.size()));
      if (inserted) labels.push_back(label);
      items.push_back(it->second);
    }
    if (items.empty()) continue;  // blank or whitespace-only line
    sets.push_back(std::move(items));
  }
  if (sets.empty()) {
    throw std::runtime_error("LoadFimi: no transactions in " + path);
  }

  auto coverage = std::make_shared<CoverageObjective>(
      static_cast<int>(labels.size()), std::move(sets));
  coverage->set_item_labels(std::move(labels));

  Instance inst;
  auto slash = path.find_last_of('/');
  inst.name = slash == std::string::npos ? path : path.substr(slash + 1);
  inst.n = coverage->GroundSize();
  inst.f = std::move(coverage);
  inst.c = std::make_shared<CardinalityConstraint>(k);
  return inst;
}

Instance GenRandomCoverage(int n_sets, int universe, double density,
                           std::uint64_t seed) {
  if (n_sets < 1 || universe < 1) {
    throw std::invalid_argument("GenRandomCoverage: sizes must be >= 1");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("GenRandomCoverage: density outside (0,1]");
  }
  std::vector<std::vector<int>> sets(n_sets);
  std::uint64_t counter = 0;
  for (int s = 0; s < n_sets; ++s) {
    for (int item = 0; item < universe; ++item) {
      if (rng::Uniform01(seed, rng::kInstanceGen, counter++) < density) {
        sets[s].push_back(item);
      }
    }
  }
  Instance inst;
  inst.name = "randcov_n" + std::to_string(n_sets) + "_u" +
              std::to_string(universe);
  inst.n = n_sets;
  inst.f = std::make_shared<CoverageObjective>(universe, std::move(sets));
  inst.c = std::make_shared<CardinalityConstraint>(n_sets);
  return inst;
}

Instance GenExemplar(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) {
    throw std::invalid_argument("GenExemplar: sizes must be >= 1");
  }
  Eigen::MatrixXd points(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      points(i, j) = NormalDraw(seed, static_cast<std::uint64_t>(i) * d + j);
    }
  }
  // Per-vector mean subtraction, then unit norm (degenerate rows stay zero).
  for (int i = 0; i < n; ++i) {
    points.row(i).array() -= points.row(i).mean();
    double norm = points.row(i).norm();
    if (norm > 1e-12) points.row(i) /= norm;
  }
  Instance inst;
  inst.name = "exemplar_n" + std::to_string(n) + "_d" + std::to_string(d);
  inst.n = n;
  inst.f = std::make_shared<ExemplarObjective>(std::move(points));
  inst.c = std::make_shared<CardinalityConstraint>(n);
  return inst;
}

void SaveFimi(const CoverageObjective& coverage, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("SaveFimi: cannot open " + path);
  const auto& labels = coverage.item_labels();
  for (const auto& set : coverage.sets()) {
    bool first = true;
    for (int item : set) {
      long long label =
          labels.empty() ? item + 1 : labels[static_cast<std::size_t>(item)];
      out << (first ? "" : " ") << label;
      first = false;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("SaveFimi: write failed for " + path);
}

}  // namespace randgreedi
