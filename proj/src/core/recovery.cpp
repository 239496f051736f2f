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

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "core/textio.hpp"

namespace gsp {

namespace {

constexpr double kPinvCutoff = 1e-10;   // relative singular-value cutoff
constexpr double kProbMatchTol = 1e-9;  // recorded vs recomputed probabilities

void check_samples(const SpectralBasis& basis, const SampleSet& samples, int kappa) {
  if (samples.indices.empty()) throw std::invalid_argument("sample set is empty");
  if (kappa < 1 || kappa > basis.n)
    throw std::invalid_argument("bandwidth " + std::to_string(kappa) + " out of range [1, " +
                                std::to_string(basis.n) + "]");
  if (samples.measurements.size() != static_cast<Eigen::Index>(samples.indices.size()) ||
      samples.probs.size() != static_cast<Eigen::Index>(samples.indices.size()))
    throw std::invalid_argument("sample set fields have mismatched lengths");
  for (int node : samples.indices)
    if (node < 0 || node >= basis.n)
      throw std::invalid_argument("sample index " + std::to_string(node) +
                                  " out of range for " + std::to_string(basis.n) + " nodes");
}

// Shared inverse-probability estimate; draw order fixes the summation order.
RecoveryResult weighted_estimate(const SpectralBasis& basis, const SampleSet& samples,
                                 int kappa, RecoveryMethod method) {
  const auto m = static_cast<Eigen::Index>(samples.indices.size());
  SpectrumVector xhat = SpectrumVector::Zero(kappa);
  for (Eigen::Index t = 0; t < m; ++t) {
    const int node = samples.indices[static_cast<std::size_t>(t)];
    const double scale = samples.measurements(t) / samples.probs(t);
    xhat += scale * basis.u.col(node).head(kappa);
  }
  xhat /= static_cast<double>(m);

  RecoveryResult out;
  out.x_star = basis.v.leftCols(kappa) * xhat;
  out.xhat_star = std::move(xhat);
  out.kappa = kappa;
  out.method = method;
  return out;
}

}  // namespace

RecoveryResult recover_random(const SpectralBasis& basis, const SampleSet& samples, int kappa) {
  check_samples(basis, samples, kappa);
  const double uniform = 1.0 / basis.n;
  for (Eigen::Index t = 0; t < samples.probs.size(); ++t)
    if (std::abs(samples.probs(t) - uniform) > kProbMatchTol * uniform)
      throw std::invalid_argument(
          "sample set was not drawn uniformly; recorded probability differs from 1/n");
  return weighted_estimate(basis, samples, kappa, RecoveryMethod::kRandomUniform);
}

RecoveryResult recover_designed(const SpectralBasis& basis, const SampleSet& samples, int kappa) {
  check_samples(basis, samples, kappa);
  const SamplingScores scores = sampling_scores(basis, kappa);
  for (std::size_t t = 0; t < samples.indices.size(); ++t) {
    const double expected = scores.scores(samples.indices[t]);
    if (std::abs(samples.probs(static_cast<Eigen::Index>(t)) - expected) >
        kProbMatchTol * std::max(expected, 1e-300))
      throw std::invalid_argument(
          "recorded sample probabilities do not match the scores for this basis and "
          "bandwidth; the estimate would be skewed");
  }
  return weighted_estimate(basis, samples, kappa, RecoveryMethod::kDesigned);
}

RecoveryResult recover_least_squares(const SpectralBasis& basis, const SampleSet& samples,
                                     int k) {
  check_samples(basis, samples, k);
  const auto m = static_cast<Eigen::Index>(samples.indices.size());
  Eigen::MatrixXd design(m, k);
  for (Eigen::Index t = 0; t < m; ++t)
    design.row(t) = basis.v.row(samples.indices[static_cast<std::size_t>(t)]).head(k);

  Eigen::BDCSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff = sv.size() > 0 ? kPinvCutoff * sv(0) : 0.0;

  SpectrumVector xhat = SpectrumVector::Zero(k);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cutoff && sv(i) > 0.0) {
      xhat += (svd.matrixU().col(i).dot(samples.measurements) / sv(i)) * svd.matrixV().col(i);
      ++rank;
    }
  }

  RecoveryResult out;
  out.x_star = basis.v.leftCols(k) * xhat;
  out.xhat_star = std::move(xhat);
  out.kappa = k;
  out.method = RecoveryMethod::kLeastSquares;
  out.rank_deficient = rank < k;
  return out;
}

GraphSignal linear_approx(const SpectralBasis& basis, const GraphSignal& x, int k) {
  if (k < 1 || k > basis.n)
    throw std::invalid_argument("bandwidth " + std::to_string(k) + " out of range [1, " +
                                std::to_string(basis.n) + "]");
  if (x.size() != basis.n)
    throw std::invalid_argument("signal length does not match basis size");
  return basis.v.leftCols(k) * (basis.u.topRows(k) * x);
}

double mse(const GraphSignal& x, const GraphSignal& x_star) {
  if (x.size() != x_star.size())
    throw std::invalid_argument("signal lengths do not match");
  return (x_star - x).squaredNorm();
}

void save_recovery_csv(const RecoveryResult& result, const std::string& path) {
  auto out = textio::open_output(path);
  out << "index,x_star,xhat_star\n";
  for (Eigen::Index i = 0; i < result.x_star.size(); ++i) {
    const double xhat = i < result.xhat_star.size() ? result.xhat_star(i) : 0.0;
    out << i << ',' << textio::format_double(result.x_star(i)) << ','
        << textio::format_double(xhat) << "\n";
  }
  textio::finish_output(out, path);
}

}  // namespace gsp
