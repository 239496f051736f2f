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

#include "core/signal_model.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/rng.hpp"
#include "core/textio.hpp"

namespace gsp {

namespace {

void check_nonzero(const GraphSignal& x) {
  if (x.size() == 0 || x.squaredNorm() == 0.0)
    throw std::invalid_argument("signal must be nonzero");
}

void check_band(int k, int n) {
  if (k < 1 || k > n)
    throw std::invalid_argument("bandwidth " + std::to_string(k) + " out of range [1, " +
                                std::to_string(n) + "]");
}

double tail_weight(int index, double beta) {
  return 1.0 + std::pow(static_cast<double>(index), 2.0 * beta);
}

}  // namespace

double global_smoothness(const GraphShift& a, const GraphSignal& x) {
  if (x.size() != a.n)
    throw std::invalid_argument("signal length does not match graph size");
  check_nonzero(x);
  return (x - a.weights * x).squaredNorm() / x.squaredNorm();
}

double blt_residual_spectrum(const SpectrumVector& xhat, int k, double beta) {
  const int n = static_cast<int>(xhat.size());
  check_band(k, n);
  if (beta < 1.0) throw std::invalid_argument("tail exponent must be at least 1");
  if (xhat.squaredNorm() == 0.0) throw std::invalid_argument("signal must be nonzero");
  double tail = 0.0;
  for (int j = k; j < n; ++j) tail += tail_weight(j, beta) * xhat(j) * xhat(j);
  return tail / xhat.squaredNorm();
}

double blt_residual(const SpectralBasis& basis, const GraphSignal& x, int k, double beta) {
  check_nonzero(x);
  return blt_residual_spectrum(gft(basis, x), k, beta);
}

bool is_bandlimited(const SpectralBasis& basis, const GraphSignal& x, int k, double tol) {
  check_band(k, basis.n);
  const SpectrumVector xhat = gft(basis, x);
  double worst = 0.0;
  for (int j = k; j < basis.n; ++j) worst = std::max(worst, std::abs(xhat(j)));
  return worst <= tol;
}

double smoothness_level_for_tail_class(const BltParams& p, double alpha2,
                                       double lambda_k_minus_1) {
  if (p.mu < 0.0) throw std::invalid_argument("tail bound mu must be nonnegative");
  const double root = std::sqrt(4.0 * alpha2 * p.mu / tail_weight(p.k, p.beta));
  const double base = 1.0 - lambda_k_minus_1 + root;
  return base * base;
}

std::optional<double> tail_bound_for_smooth_class(double eta, const BltParams& p,
                                                  double alpha1, double lambda_k, int n) {
  if (eta < 0.0) throw std::invalid_argument("smoothness level eta must be nonnegative");
  if (lambda_k >= 1.0) return std::nullopt;
  return tail_weight(n - 1, p.beta) / ((1.0 - lambda_k) * alpha1) * eta;
}

InclusionThresholds class_inclusion_thresholds(const SpectralBasis& basis, const BltParams& p,
                                               double eta) {
  check_band(p.k, basis.n);
  InclusionThresholds out;
  out.eta_threshold =
      smoothness_level_for_tail_class(p, basis.alpha2, basis.eigenvalues(p.k - 1));
  const double lambda_k = p.k < basis.n ? basis.eigenvalues(p.k) : basis.eigenvalues(basis.n - 1);
  out.mu_threshold = tail_bound_for_smooth_class(eta, p, basis.alpha1, lambda_k, basis.n);
  return out;
}

BltSignal generate_blt_signal(const SpectralBasis& basis, int k, double beta,
                              std::uint64_t seed) {
  check_band(k, basis.n);
  if (beta < 1.0) throw std::invalid_argument("tail exponent must be at least 1");
  rng::Stream stream(seed);
  SpectrumVector xhat(basis.n);
  for (int j = 0; j < k; ++j) xhat(j) = stream.normal(1.0, std::sqrt(0.5));
  for (int j = k; j < basis.n; ++j)
    xhat(j) = std::pow(static_cast<double>(k) / static_cast<double>(j), 2.0 * beta);
  xhat /= xhat.norm();
  return BltSignal{igft(basis, xhat), std::move(xhat)};
}

void save_signal(const GraphSignal& x, const std::string& path) {
  auto out = textio::open_output(path);
  out << x.size() << "\n";
  for (Eigen::Index i = 0; i < x.size(); ++i) out << textio::format_double(x(i)) << "\n";
  textio::finish_output(out, path);
}

GraphSignal load_signal(const std::string& path) {
  auto in = textio::open_input(path);
  long long n = 0;
  if (!(in >> n) || n < 1) throw ParseError("header: expected a positive signal length");
  GraphSignal x(n);
  for (long long i = 0; i < n; ++i) {
    if (!(in >> x(i)))
      throw ParseError("value line " + std::to_string(i + 1) + ": expected a number");
  }
  return x;
}

}  // namespace gsp
