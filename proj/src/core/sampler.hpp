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

#include "core/spectral.hpp"

namespace gsp {

// Noisy measurements y_t = x[indices_t] + noise, drawn with replacement.
// `probs` records the selection probability of each draw (1/n for uniform
// sampling, the node's score otherwise); `sigma` is the noise standard
// deviation.
struct SampleSet {
  std::vector<int> indices;
  Eigen::VectorXd measurements;
  Eigen::VectorXd probs;
  double sigma = 0.0;
};

// Dense selection matrix: row t has a single 1 in column indices[t].
Eigen::MatrixXd sampling_operator(const std::vector<int>& indices, int n);

// m i.i.d. uniform draws over the nodes, fresh Gaussian noise per draw
// (even when the same node repeats). Deterministic for a fixed seed.
SampleSet sample_uniform(const GraphSignal& x, int m, double sigma, std::uint64_t seed);

// m i.i.d. draws from the categorical distribution given by `scores`
// (inverse-CDF over the cumulative scores). Rejects degenerate scores.
SampleSet sample_scored(const GraphSignal& x, const SamplingScores& scores, int m,
                        double sigma, std::uint64_t seed);

// CSV with header `index,measurement,prob`.
void save_samples_csv(const SampleSet& samples, const std::string& path);
SampleSet load_samples_csv(const std::string& path);

}  // namespace gsp
