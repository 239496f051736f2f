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

#include "core/recovery.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "core/graph.hpp"
#include "core/rng.hpp"
#include "core/signal_model.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace gsp;

namespace {

SpectralBasis ring_basis(int n, int k) { return decompose(normalize_shift(build_ring_knn(n, k))); }
SpectralBasis star_basis(int n) { return decompose(normalize_shift(build_star(n))); }

SampleSet manual_samples(std::vector<int> indices, const GraphSignal& x, double prob) {
  SampleSet out;
  out.indices = std::move(indices);
  out.measurements.resize(static_cast<Eigen::Index>(out.indices.size()));
  for (std::size_t t = 0; t < out.indices.size(); ++t)
    out.measurements(static_cast<Eigen::Index>(t)) = x(out.indices[t]);
  out.probs = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(out.indices.size()), prob);
  out.sigma = 0.0;
  return out;
}

}  // namespace

TEST_CASE("single noiseless draw recovers a constant ring signal exactly") {
  const SpectralBasis basis = ring_basis(8, 2);
  const GraphSignal x = 2.5 * GraphSignal::Ones(8);
  const SampleSet samples = sample_uniform(x, 1, 0.0, 17);
  const RecoveryResult result = recover_random(basis, samples, 1);
  CHECK(result.kappa == 1);
  CHECK(result.method == RecoveryMethod::kRandomUniform);
  for (int i = 0; i < 8; ++i)
    CHECK(result.x_star(i) == doctest::Approx(2.5).epsilon(1e-12));
  // the reconstruction identity x_star = V_kappa xhat_star
  CHECK((result.x_star - basis.v.leftCols(1) * result.xhat_star).cwiseAbs().maxCoeff() <=
        1e-10);
}

TEST_CASE("full-band estimate is consistent: the trial mean approaches the signal") {
  const SpectralBasis basis = ring_basis(32, 4);
  const BltSignal signal = generate_blt_signal(basis, 8, 1.0, 90);
  const int trials = 200;
  Eigen::MatrixXd estimates(32, trials);
  for (int t = 0; t < trials; ++t) {
    const SampleSet samples =
        sample_uniform(signal.x, 64, 0.0, rng::derive_seed(4000, static_cast<std::uint64_t>(t)));
    estimates.col(t) = recover_random(basis, samples, 32).x_star;
  }
  const Eigen::VectorXd mean = estimates.rowwise().mean();
  for (int i = 0; i < 32; ++i) {
    const double sd = std::sqrt((estimates.row(i).array() - mean(i)).square().sum() /
                                (trials - 1));
    const double se = sd / std::sqrt(static_cast<double>(trials));
    CHECK(std::abs(mean(i) - signal.x(i)) <= 3.5 * se + 1e-12);
  }
}

TEST_CASE("estimators reject empty sample sets and bad bandwidths") {
  const SpectralBasis basis = ring_basis(8, 2);
  SampleSet empty;
  CHECK_THROWS_AS(recover_random(basis, empty, 1), std::invalid_argument);
  const SampleSet samples = sample_uniform(GraphSignal::Ones(8), 4, 0.0, 1);
  CHECK_THROWS_AS(recover_random(basis, samples, 0), std::invalid_argument);
  CHECK_THROWS_AS(recover_random(basis, samples, 9), std::invalid_argument);
}

TEST_CASE("score-weighted recovery with uniform scores reproduces uniform recovery") {
  // bandwidth 3 covers whole frequency pairs on the ring, so its scores are
  // exactly uniform and the two estimators get identical inputs
  const SpectralBasis basis = ring_basis(8, 2);
  const BltSignal signal = generate_blt_signal(basis, 3, 1.0, 12);
  const SamplingScores scores = sampling_scores(basis, 3);
  const SampleSet samples = sample_scored(signal.x, scores, 40, 0.1, 33);

  const RecoveryResult designed = recover_designed(basis, samples, 3);
  const RecoveryResult random = recover_random(basis, samples, 3);
  for (int i = 0; i < 8; ++i) {
    const double denom = std::max(std::abs(random.x_star(i)), 1e-30);
    CHECK(std::abs(designed.x_star(i) - random.x_star(i)) / denom <= 1e-12);
  }
}

TEST_CASE("exhaustive four-outcome expectation on the small star matches the spectrum") {
  const SpectralBasis basis = star_basis(4);
  GraphSignal x(4);
  x << 0.3, -1.2, 2.0, 0.7;
  const SamplingScores scores = sampling_scores(basis, 1);
  const double xhat0 = gft(basis, x)(0);

  // every possible single noiseless draw, weighted by its probability
  double expectation = 0.0;
  for (int node = 0; node < 4; ++node) {
    const SampleSet one = manual_samples({node}, x, scores.scores(node));
    const RecoveryResult result = recover_designed(basis, one, 1);
    expectation += scores.scores(node) * result.xhat_star(0);
  }
  CHECK(expectation == doctest::Approx(xhat0).epsilon(1e-12));
}

TEST_CASE("score-weighted recovery is unbiased for the projected signal") {
  const SpectralBasis basis = star_basis(16);
  const BltSignal signal = generate_blt_signal(basis, 4, 1.0, 8);
  const GraphSignal target = linear_approx(basis, signal.x, 4);
  const SamplingScores scores = sampling_scores(basis, 4);
  const int trials = 2000;
  Eigen::MatrixXd estimates(16, trials);
  for (int t = 0; t < trials; ++t) {
    const SampleSet samples = sample_scored(
        signal.x, scores, 8, 0.1, rng::derive_seed(600, static_cast<std::uint64_t>(t)));
    estimates.col(t) = recover_designed(basis, samples, 4).x_star;
  }
  const Eigen::VectorXd mean = estimates.rowwise().mean();
  for (int i = 0; i < 16; ++i) {
    const double sd = std::sqrt((estimates.row(i).array() - mean(i)).square().sum() /
                                (trials - 1));
    const double se = sd / std::sqrt(static_cast<double>(trials));
    CHECK(std::abs(mean(i) - target(i)) <= 4.0 * se + 1e-12);
  }
}

TEST_CASE("mismatched probabilities are detected instead of skewing the estimate") {
  const SpectralBasis basis = star_basis(8);
  const GraphSignal x = GraphSignal::Ones(8);

  // drawn for bandwidth 1, recovered at bandwidth 2
  const SampleSet scored = sample_scored(x, sampling_scores(basis, 1), 10, 0.0, 3);
  CHECK_THROWS_AS(recover_designed(basis, scored, 2), std::invalid_argument);

  // uniform recovery on score-weighted draws
  CHECK_THROWS_AS(recover_random(basis, scored, 1), std::invalid_argument);

  // score-weighted recovery on uniform draws (star scores are not uniform)
  const SampleSet uniform = sample_uniform(x, 10, 0.0, 3);
  CHECK_THROWS_AS(recover_designed(basis, uniform, 1), std::invalid_argument);
}

TEST_CASE("projection fixes bandlimited signals and the full band is the identity") {
  const SpectralBasis basis = ring_basis(16, 2);
  const GraphSignal bl = basis.v.col(0) - 0.5 * basis.v.col(2);
  CHECK((linear_approx(basis, bl, 3) - bl).cwiseAbs().maxCoeff() <= 1e-9);

  rng::Stream stream(41);
  GraphSignal x(16);
  for (int i = 0; i < 16; ++i) x(i) = stream.normal();
  CHECK((linear_approx(basis, x, 16) - x).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("projection residual equals the spectral tail energy") {
  const SpectralBasis basis = ring_basis(64, 4);
  const BltSignal signal = generate_blt_signal(basis, 10, 1.0, 1001);
  const GraphSignal projected = linear_approx(basis, signal.x, 10);
  const double tail = signal.xhat_true.tail(54).squaredNorm();
  CHECK(mse(signal.x, projected) == doctest::Approx(tail).epsilon(1e-10));
}

TEST_CASE("least squares recovers bandlimited signals exactly from full-rank draws") {
  const SpectralBasis basis = ring_basis(16, 2);
  const GraphSignal x = 2.0 * basis.v.col(0) + basis.v.col(1) - 3.0 * basis.v.col(2);
  const SampleSet samples = manual_samples({0, 3, 6, 9, 12}, x, 1.0 / 16.0);
  const RecoveryResult result = recover_least_squares(basis, samples, 3);
  CHECK(!result.rank_deficient);
  CHECK((result.x_star - x).cwiseAbs().maxCoeff() <= 1e-8);
}

TEST_CASE("least squares is biased for the low band when the tail is nonzero") {
  const SpectralBasis basis = ring_basis(16, 2);
  // deliberate tail at frequency 5
  const GraphSignal x = basis.v.col(0) + basis.v.col(1) + 0.8 * basis.v.col(5);
  const SampleSet samples = manual_samples({0, 2, 5, 9, 11}, x, 1.0 / 16.0);
  const RecoveryResult result = recover_least_squares(basis, samples, 2);
  const Eigen::VectorXd truth = basis.u.topRows(2) * x;
  CHECK((result.xhat_star - truth).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("least squares over all nodes at bandwidth one reduces to the projection") {
  const SpectralBasis basis = ring_basis(16, 2);
  rng::Stream stream(4242);
  GraphSignal x(16);
  for (int i = 0; i < 16; ++i) x(i) = stream.normal();
  std::vector<int> all;
  for (int i = 0; i < 16; ++i) all.push_back(i);
  const SampleSet samples = manual_samples(all, x, 1.0 / 16.0);
  const RecoveryResult result = recover_least_squares(basis, samples, 1);
  CHECK((result.x_star - linear_approx(basis, x, 1)).cwiseAbs().maxCoeff() <= 1e-9);
}

TEST_CASE("least squares flags rank deficiency but still returns a result") {
  const SpectralBasis basis = ring_basis(16, 2);
  const GraphSignal x = GraphSignal::Ones(16);
  const SampleSet samples = manual_samples({4, 4, 4}, x, 1.0 / 16.0);
  const RecoveryResult result = recover_least_squares(basis, samples, 2);
  CHECK(result.rank_deficient);
  CHECK(result.x_star.allFinite());
}

TEST_CASE("squared error") {
  GraphSignal a(3), b(3);
  a << 1, 2, 3;
  b = a;
  CHECK(mse(a, b) == 0.0);
  b(1) += 1.0;
  CHECK(mse(a, b) == 1.0);

  rng::Stream stream(3);
  GraphSignal u(10), v(10);
  for (int i = 0; i < 10; ++i) {
    u(i) = stream.normal();
    v(i) = stream.normal();
  }
  double direct = 0.0;
  for (int i = 0; i < 10; ++i) direct += (v(i) - u(i)) * (v(i) - u(i));
  CHECK(mse(u, v) == doctest::Approx(direct).epsilon(1e-12));
  CHECK_THROWS_AS(mse(u, GraphSignal::Zero(9)), std::invalid_argument);
}

TEST_CASE("recovery CSV pads the spectrum column with zeros") {
  const SpectralBasis basis = ring_basis(8, 2);
  const SampleSet samples = sample_uniform(GraphSignal::Ones(8), 6, 0.0, 9);
  const RecoveryResult result = recover_random(basis, samples, 2);
  const std::string path = testutil::temp_path("recovery.csv");
  save_recovery_csv(result, path);
  const std::string text = testutil::read_file(path);
  CHECK(text.rfind("index,x_star,xhat_star\n", 0) == 0);
  // 8 data rows plus header
  CHECK(std::count(text.begin(), text.end(), '\n') == 9);
  std::remove(path.c_str());
}
