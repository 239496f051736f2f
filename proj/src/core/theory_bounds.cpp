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

#include "core/theory_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gsp {

namespace {

void check_inputs(const BoundInputs& in) {
  if (in.kappa < 1 || in.m < 1 || in.n < 1)
    throw std::invalid_argument("bound inputs need kappa >= 1, m >= 1, n >= 1");
  if (in.mu < 0.0 || in.signal_norm_sq < 0.0 || in.max_coeff_sq < 0.0 || in.sigma_sq < 0.0 ||
      in.frob_sq < 0.0 || in.l21_sq < 0.0 || in.alpha2 < 0.0)
    throw std::invalid_argument("bound inputs must be nonnegative");
}

double bias_term(const BoundInputs& in) {
  return in.alpha2 * in.mu * in.signal_norm_sq /
         std::pow(static_cast<double>(in.kappa), 2.0 * in.beta);
}

double noise_factor(const BoundInputs& in) {
  return in.alpha2 * (in.max_coeff_sq + in.sigma_sq) / static_cast<double>(in.m);
}

}  // namespace

double bound_random(const BoundInputs& in) {
  check_inputs(in);
  return bias_term(in) + noise_factor(in) * static_cast<double>(in.n) * in.frob_sq;
}

double bound_designed(const BoundInputs& in) {
  check_inputs(in);
  return bias_term(in) + noise_factor(in) * in.l21_sq;
}

int optimal_kappa(double beta, int m, int n, const RateSpec& rate) {
  if (m < 1) throw std::invalid_argument("sample count must be at least 1");
  if (n < 1) throw std::invalid_argument("graph size must be at least 1");
  double denom = 0.0;
  switch (rate.kind) {
    case RateSpec::Kind::kType1:
      denom = 2.0 * beta + 1.0;
      break;
    case RateSpec::Kind::kType2:
      denom = 2.0 * beta + 2.0 - rate.gamma;
      break;
  }
  if (!(denom > 0.0))
    throw std::invalid_argument("rate exponent denominator must be positive; gamma too large");
  const double raw = std::pow(static_cast<double>(m), 1.0 / denom);
  const long long rounded = std::llround(raw);
  return static_cast<int>(std::clamp<long long>(rounded, 1, n));
}

GammaInterval gamma_interval(double beta, int m, int n, int k, int k0) {
  if (m < 1 || n < 2) throw std::invalid_argument("need m >= 1 and n >= 2");
  const int cutoff = std::max(k, k0);
  if (cutoff < 1) throw std::invalid_argument("cutoff max(k, k0) must be at least 1");
  GammaInterval out;
  const double log_cutoff = std::log(static_cast<double>(cutoff));
  if (log_cutoff > 0.0)
    out.lo = std::max(1.0, 2.0 * beta + 2.0 - std::log(static_cast<double>(m)) / log_cutoff);
  else
    out.lo = 1.0;
  const double log_n = std::log(static_cast<double>(n));
  out.hi = std::max(1.0, (2.0 * beta + 2.0) * log_n /
                             (log_n + std::log(static_cast<double>(m))));
  return out;
}

bool gamma_in_interval(double gamma, const GammaInterval& interval) {
  return gamma >= interval.lo && gamma <= interval.hi;
}

RateFit fit_rate(const std::vector<int>& sample_sizes, const std::vector<double>& mean_mse) {
  if (sample_sizes.size() != mean_mse.size())
    throw std::invalid_argument("sample sizes and errors have different lengths");
  if (sample_sizes.size() < 4)
    throw std::invalid_argument("rate fit needs at least 4 sample sizes");
  const auto [lo, hi] = std::minmax_element(sample_sizes.begin(), sample_sizes.end());
  if (*lo < 1 || *hi < 10 * *lo)
    throw std::invalid_argument("rate fit needs sample sizes spanning at least one decade");
  for (double v : mean_mse)
    if (!(v > 0.0)) throw std::invalid_argument("rate fit needs strictly positive errors");

  const auto count = static_cast<double>(sample_sizes.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < sample_sizes.size(); ++i) {
    const double x = std::log(static_cast<double>(sample_sizes[i]));
    const double y = std::log(mean_mse[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double vxx = sxx - sx * sx / count;
  const double vxy = sxy - sx * sy / count;
  const double vyy = syy - sy * sy / count;

  RateFit fit;
  fit.slope = vxy / vxx;
  fit.intercept = (sy - fit.slope * sx) / count;
  fit.r2 = vyy > 0.0 ? (vxy * vxy) / (vxx * vyy) : 1.0;
  return fit;
}

}  // namespace gsp
