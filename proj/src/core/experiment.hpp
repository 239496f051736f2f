// Copyright 2026 the graphsample authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/theory_bounds.hpp"

namespace gsp {

struct GraphSpec {
  enum class Family { kRing, kErdosRenyi, kStar } family = Family::kRing;
  int n = 64;
  int ring_k = 4;               // ring only
  double er_p = 0.2;            // Erdos-Renyi only
  std::uint64_t er_seed = 1;    // Erdos-Renyi only
};

// Builds the requested family and normalizes it.
GraphShift build_graph(const GraphSpec& spec);

// Bandwidth per sample size: either fixed, or the rate-optimal power law.
struct KappaSchedule {
  enum class Kind { kFixed, kRateType1, kRateType2 } kind = Kind::kFixed;
  int kappa = 10;      // kFixed
  double gamma = 1.0;  // kRateType2
};

struct ExperimentConfig {
  GraphSpec graph;
  int signal_k = 10;
  double signal_beta = 1.0;
  double sigma_sq = 0.01;
  KappaSchedule kappa;
  std::vector<int> sample_sizes;
  int trials = 50;
  std::uint64_t seed = 1;
};

// Per-strategy Monte Carlo statistics, one entry per sample size.
struct MseSeries {
  std::vector<double> mean;
  std::vector<double> std_err;
  std::vector<double> mean_bound;  // matching worst-case bound, averaged over trials
};

struct MseCurve {
  std::vector<int> sample_sizes;
  std::vector<int> kappas;  // bandwidth actually used per size
  MseSeries random;
  MseSeries designed;
  double floor = 0.0;  // mean squared error of the bandlimited projection
};

// Runs the Monte Carlo protocol: per trial a fresh signal, then for every
// sample size and both strategies a fresh draw and recovery. Deterministic
// for a fixed config and seed.
MseCurve run_experiment(const ExperimentConfig& config);

// CSV schema: `sample_size,strategy,mean_mse,std_err,floor`.
void emit_csv(const MseCurve& curve, const std::string& path);
MseCurve load_curve_csv(const std::string& path);

// Whitespace columns for plotting:
// sample_size, random mean/stderr, designed mean/stderr, floor.
void emit_plot_data(const MseCurve& curve, const std::string& path);

// CSV schema: `sample_size,strategy,mean_mse,std_err,bound`.
void emit_bounds_csv(const MseCurve& curve, const std::string& path);

// One strategy's curve, for cross-strategy comparison.
struct StrategyCurve {
  std::vector<int> sample_sizes;
  std::vector<double> mean;
  std::vector<double> std_err;
};
StrategyCurve strategy_curve(const MseCurve& curve, bool designed);

// Per-size mean ratio a/b with a two-sigma verdict: `kSimilar` when no size
// separates the strategies, otherwise whichever side wins more sizes.
struct CompareReport {
  enum class Verdict { kSimilar, kABetter, kBBetter } verdict = Verdict::kSimilar;
  std::vector<double> ratios;
  std::vector<double> z_scores;  // (mean_a - mean_b) / pooled stderr
};
CompareReport compare_strategies(const StrategyCurve& a, const StrategyCurve& b);

}  // namespace gsp
