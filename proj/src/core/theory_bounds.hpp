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

#include <vector>

namespace gsp {

// Everything the worst-case MSE bounds need: frame bound alpha2, measured
// tail bound mu at bandwidth kappa, signal energy and peak squared
// coefficient, noise variance, sample count m, and the norm functionals of
// the first-kappa-rows transform block.
struct BoundInputs {
  double alpha2 = 1.0;
  double mu = 0.0;
  double signal_norm_sq = 1.0;
  double max_coeff_sq = 0.0;
  double sigma_sq = 0.0;
  int kappa = 1;
  double beta = 1.0;
  int m = 1;
  double frob_sq = 0.0;
  double l21_sq = 0.0;
  int n = 1;
};

// Expected squared error bound for uniform sampling:
//   alpha2 * mu * ||x||^2 / kappa^(2 beta)
//   + alpha2 * (max_j x_j^2 + sigma^2) / m * n * frob_sq.
double bound_random(const BoundInputs& in);

// Same bias term; the variance term uses the squared (2,1) norm instead of
// n * frob_sq, which is never larger.
double bound_designed(const BoundInputs& in);

// Bandwidth schedule that achieves the predicted convergence rates:
// round(m^(1/(2 beta + 1))) for flat-transform graphs, or
// round(m^(1/(2 beta + 2 - gamma))) for score-concentrated ones, clamped
// to [1, n].
struct RateSpec {
  enum class Kind { kType1, kType2 } kind = Kind::kType1;
  double gamma = 1.0;  // kType2 only
};
int optimal_kappa(double beta, int m, int n, const RateSpec& rate);

// Admissible gamma range for the score-concentrated rate, as a function of
// the sample count, graph size, and the larger of the signal bandwidth and
// the concentration cutoff.
struct GammaInterval {
  double lo = 1.0;
  double hi = 1.0;
};
GammaInterval gamma_interval(double beta, int m, int n, int k, int k0);
bool gamma_in_interval(double gamma, const GammaInterval& interval);

// Ordinary least squares of log(mse) on log(m). Needs at least four sizes
// spanning a decade and strictly positive errors.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
};
RateFit fit_rate(const std::vector<int>& sample_sizes, const std::vector<double>& mean_mse);

}  // namespace gsp
