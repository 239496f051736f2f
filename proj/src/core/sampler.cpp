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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/textio.hpp"

namespace gsp {

namespace {

void check_draw_args(Eigen::Index n, int m, double sigma) {
  if (n < 1) throw std::invalid_argument("signal must be nonempty");
  if (m < 1) throw std::invalid_argument("sample count must be at least 1");
  if (sigma < 0.0) throw std::invalid_argument("noise level must be nonnegative");
}

}  // namespace

Eigen::MatrixXd sampling_operator(const std::vector<int>& indices, int n) {
  Eigen::MatrixXd psi =
      Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(indices.size()), n);
  for (std::size_t t = 0; t < indices.size(); ++t) {
    if (indices[t] < 0 || indices[t] >= n)
      throw std::invalid_argument("sample index " + std::to_string(indices[t]) +
                                  " out of range for " + std::to_string(n) + " nodes");
    psi(static_cast<Eigen::Index>(t), indices[t]) = 1.0;
  }
  return psi;
}

SampleSet sample_uniform(const GraphSignal& x, int m, double sigma, std::uint64_t seed) {
  check_draw_args(x.size(), m, sigma);
  const int n = static_cast<int>(x.size());
  rng::Stream stream(seed);
  SampleSet out;
  out.indices.reserve(static_cast<std::size_t>(m));
  out.measurements.resize(m);
  out.probs = Eigen::VectorXd::Constant(m, 1.0 / n);
  out.sigma = sigma;
  for (int t = 0; t < m; ++t) {
    const int node = std::min(static_cast<int>(stream.uniform01() * n), n - 1);
    out.indices.push_back(node);
    double y = x(node);
    if (sigma > 0.0) y += stream.normal(0.0, sigma);
    out.measurements(t) = y;
  }
  return out;
}

SampleSet sample_scored(const GraphSignal& x, const SamplingScores& scores, int m,
                        double sigma, std::uint64_t seed) {
  check_draw_args(x.size(), m, sigma);
  const int n = static_cast<int>(x.size());
  if (scores.scores.size() != n)
    throw std::invalid_argument("scores length does not match signal length");
  if (scores.scores.minCoeff() <= 0.0)
    throw std::invalid_argument("degenerate sampling scores: every node needs a positive score");
  if (std::abs(scores.scores.sum() - 1.0) > 1e-9)
    throw std::invalid_argument("sampling scores must sum to one");

  Eigen::VectorXd cumulative(n);
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    acc += scores.scores(i);
    cumulative(i) = acc;
  }
  cumulative(n - 1) = 1.0;

  rng::Stream stream(seed);
  SampleSet out;
  out.indices.reserve(static_cast<std::size_t>(m));
  out.measurements.resize(m);
  out.probs.resize(m);
  out.sigma = sigma;
  for (int t = 0; t < m; ++t) {
    const double u = stream.uniform01();
    const auto it = std::upper_bound(cumulative.data(), cumulative.data() + n, u);
    const int node = std::min(static_cast<int>(it - cumulative.data()), n - 1);
    out.indices.push_back(node);
    out.probs(t) = scores.scores(node);
    double y = x(node);
    if (sigma > 0.0) y += stream.normal(0.0, sigma);
    out.measurements(t) = y;
  }
  return out;
}

void save_samples_csv(const SampleSet& samples, const std::string& path) {
  auto out = textio::open_output(path);
  out << "index,measurement,prob\n";
  for (std::size_t t = 0; t < samples.indices.size(); ++t) {
    out << samples.indices[t] << ',' << textio::format_double(samples.measurements(t)) << ','
        << textio::format_double(samples.probs(t)) << "\n";
  }
  textio::finish_output(out, path);
}

SampleSet load_samples_csv(const std::string& path) {
  auto in = textio::open_input(path);
  std::string line;
  if (!std::getline(in, line) || line != "index,measurement,prob")
    throw ParseError("line 1: expected header 'index,measurement,prob'");
  std::vector<int> indices;
  std::vector<double> measurements, probs;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string a, b, c;
    if (!std::getline(iss, a, ',') || !std::getline(iss, b, ',') || !std::getline(iss, c))
      throw ParseError("line " + std::to_string(line_no) + ": expected three comma-separated fields");
    try {
      indices.push_back(std::stoi(a));
      measurements.push_back(std::stod(b));
      probs.push_back(std::stod(c));
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": malformed number");
    }
  }
  SampleSet out;
  out.indices = std::move(indices);
  out.measurements = Eigen::Map<Eigen::VectorXd>(measurements.data(),
                                                 static_cast<Eigen::Index>(measurements.size()));
  out.probs =
      Eigen::Map<Eigen::VectorXd>(probs.data(), static_cast<Eigen::Index>(probs.size()));
  return out;
}

}  // namespace gsp
