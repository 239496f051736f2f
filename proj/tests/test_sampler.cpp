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

#include "core/sampler.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <vector>

#include "core/graph.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace gsp;

namespace {

SpectralBasis star_basis(int n) { return decompose(normalize_shift(build_star(n))); }

double chi_square_uniform(const std::vector<int>& counts, int draws) {
  const double expected = static_cast<double>(draws) / counts.size();
  double stat = 0.0;
  for (int c : counts) stat += (c - expected) * (c - expected) / expected;
  return stat;
}

}  // namespace

TEST_CASE("selection matrix places a single one per row") {
  const Eigen::MatrixXd psi = sampling_operator({2, 0}, 3);
  Eigen::MatrixXd expected(2, 3);
  expected << 0, 0, 1, 1, 0, 0;
  CHECK((psi - expected).cwiseAbs().maxCoeff() == 0.0);

  std::vector<int> all{0, 1, 2, 3};
  CHECK((sampling_operator(all, 4) - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() ==
        0.0);

  Eigen::Vector3d x(5.0, 6.0, 7.0);
  const Eigen::VectorXd repeated = sampling_operator({1, 1}, 3) * x;
  CHECK(repeated(0) == 6.0);
  CHECK(repeated(1) == 6.0);

  CHECK_THROWS_AS(sampling_operator({3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(sampling_operator({-1}, 3), std::invalid_argument);
}

TEST_CASE("noiseless uniform sampling reads coefficients exactly") {
  GraphSignal x(6);
  x << 1, 2, 3, 4, 5, 6;
  const SampleSet samples = sample_uniform(x, 20, 0.0, 31);
  for (std::size_t t = 0; t < samples.indices.size(); ++t) {
    CHECK(samples.measurements(static_cast<Eigen::Index>(t)) == x(samples.indices[t]));
    CHECK(samples.probs(static_cast<Eigen::Index>(t)) == 1.0 / 6.0);
  }
  CHECK(samples.sigma == 0.0);
}

TEST_CASE("uniform sampling is deterministic per seed") {
  const GraphSignal x = GraphSignal::LinSpaced(16, 0.0, 15.0);
  const SampleSet a = sample_uniform(x, 50, 0.1, 7);
  const SampleSet b = sample_uniform(x, 50, 0.1, 7);
  CHECK(a.indices == b.indices);
  CHECK((a.measurements - b.measurements).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("uniform draw frequencies pass a chi-square check over a million draws") {
  const int n = 64;
  const int draws = 1000000;
  const GraphSignal x = GraphSignal::Zero(n);
  const SampleSet samples = sample_uniform(x, draws, 0.0, 1234);
  std::vector<int> counts(n, 0);
  for (int idx : samples.indices) counts[static_cast<std::size_t>(idx)]++;
  // per-node counts within 4 sigma of the multinomial expectation
  const double expected = static_cast<double>(draws) / n;
  const double sigma = std::sqrt(expected * (1.0 - 1.0 / n));
  for (int c : counts) CHECK(std::abs(c - expected) <= 4.0 * sigma);
  // chi-square with 63 degrees of freedom: mean 63, sd ~11.2
  CHECK(chi_square_uniform(counts, draws) <= 63.0 + 5.0 * std::sqrt(126.0));
}

TEST_CASE("measurement noise has the configured mean and variance") {
  const int draws = 100000;
  const double sigma = 0.1;
  const GraphSignal x = GraphSignal::Zero(32);
  const SampleSet samples = sample_uniform(x, draws, sigma, 555);
  const double mean = samples.measurements.mean();
  CHECK(std::abs(mean) <= 4.0 * sigma / std::sqrt(static_cast<double>(draws)));
  const double var =
      (samples.measurements.array() - mean).square().sum() / (draws - 1);
  CHECK(var == doctest::Approx(sigma * sigma).epsilon(0.05));
}

TEST_CASE("sampling is with replacement: more draws than nodes forces duplicates") {
  const GraphSignal x = GraphSignal::Zero(8);
  const SampleSet samples = sample_uniform(x, 16, 0.0, 2);
  std::set<int> unique(samples.indices.begin(), samples.indices.end());
  CHECK(unique.size() < samples.indices.size());
}

TEST_CASE("scored sampling with uniform scores behaves like uniform sampling") {
  const int n = 64;
  const int draws = 200000;
  const GraphSignal x = GraphSignal::Zero(n);
  SamplingScores uniform{Eigen::VectorXd::Constant(n, 1.0 / n), n};
  const SampleSet samples = sample_scored(x, uniform, draws, 0.0, 99);
  std::vector<int> counts(n, 0);
  for (int idx : samples.indices) counts[static_cast<std::size_t>(idx)]++;
  const double expected = static_cast<double>(draws) / n;
  const double sigma = std::sqrt(expected * (1.0 - 1.0 / n));
  for (int c : counts) CHECK(std::abs(c - expected) <= 4.0 * sigma);
  for (Eigen::Index t = 0; t < samples.probs.size(); ++t)
    CHECK(samples.probs(t) == 1.0 / n);
}

TEST_CASE("scored sampling hits the star hub at its score frequency") {
  const SpectralBasis basis = star_basis(4);
  const SamplingScores scores = sampling_scores(basis, 1);
  const GraphSignal x = GraphSignal::Zero(4);
  const int draws = 100000;
  const SampleSet samples = sample_scored(x, scores, draws, 0.0, 77);
  int hub = 0;
  for (int idx : samples.indices)
    if (idx == 0) ++hub;
  const double p = scores.scores(0);  // about 0.366
  const double freq = static_cast<double>(hub) / draws;
  const double sigma = std::sqrt(p * (1.0 - p) / draws);
  CHECK(std::abs(freq - p) <= 4.0 * sigma);
  // recorded probabilities are the drawn node's score
  for (std::size_t t = 0; t < samples.indices.size(); ++t)
    CHECK(samples.probs(static_cast<Eigen::Index>(t)) == scores.scores(samples.indices[t]));
}

TEST_CASE("single noiseless scored draw reads one coefficient") {
  GraphSignal x(4);
  x << 10, 20, 30, 40;
  const SpectralBasis basis = star_basis(4);
  const SampleSet samples = sample_scored(x, sampling_scores(basis, 1), 1, 0.0, 5);
  REQUIRE(samples.indices.size() == 1);
  CHECK(samples.measurements(0) == x(samples.indices[0]));
}

TEST_CASE("scored sampling rejects degenerate or inconsistent scores") {
  const GraphSignal x = GraphSignal::Zero(4);
  SamplingScores with_zero{Eigen::VectorXd::Zero(4), 1};
  with_zero.scores << 0.5, 0.5, 0.0, 0.0;
  CHECK_THROWS_AS(sample_scored(x, with_zero, 3, 0.0, 1), std::invalid_argument);

  SamplingScores wrong_length{Eigen::VectorXd::Constant(3, 1.0 / 3.0), 1};
  CHECK_THROWS_AS(sample_scored(x, wrong_length, 3, 0.0, 1), std::invalid_argument);

  SamplingScores bad_sum{Eigen::VectorXd::Constant(4, 0.3), 1};
  CHECK_THROWS_AS(sample_scored(x, bad_sum, 3, 0.0, 1), std::invalid_argument);

  CHECK_THROWS_AS(sample_uniform(x, 0, 0.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_uniform(x, 5, -0.1, 1), std::invalid_argument);
}

TEST_CASE("sample CSV round trips") {
  GraphSignal x(5);
  x << -1.5, 0.25, 3.0, 7.125, -0.875;
  const SampleSet samples = sample_uniform(x, 12, 0.3, 2026);
  const std::string path = testutil::temp_path("samples.csv");
  save_samples_csv(samples, path);

  const std::string text = testutil::read_file(path);
  CHECK(text.rfind("index,measurement,prob\n", 0) == 0);

  const SampleSet loaded = load_samples_csv(path);
  CHECK(loaded.indices == samples.indices);
  CHECK((loaded.measurements - samples.measurements).cwiseAbs().maxCoeff() == 0.0);
  CHECK((loaded.probs - samples.probs).cwiseAbs().maxCoeff() == 0.0);
  std::remove(path.c_str());
}
