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
#include <optional>
#include <string>

#include "core/spectral.hpp"

namespace gsp {

// Parameters of the tail-bounded smoothness class: spectra may have energy
// above frequency index k, but the tail weighted by (1 + freq^(2*beta)) must
// stay below mu times the signal energy.
struct BltParams {
  int k = 1;
  double beta = 1.0;
  double mu = 0.0;
};

// Smallest eta with ||x - A x||^2 <= eta ||x||^2. Rejects the zero signal.
double global_smoothness(const GraphShift& a, const GraphSignal& x);

// Smallest admissible tail bound: sum_{j >= k} (1 + j^(2 beta)) xhat_j^2
// divided by ||x||^2. The spectrum overload takes xhat directly.
double blt_residual(const SpectralBasis& basis, const GraphSignal& x, int k, double beta);
double blt_residual_spectrum(const SpectrumVector& xhat, int k, double beta);

// True when every component at or above index k is below tol in magnitude.
bool is_bandlimited(const SpectralBasis& basis, const GraphSignal& x, int k, double tol);

// Class-inclusion thresholds between the tail-bounded class and the global
// smoothness class.
//
// eta_threshold: every signal in the tail class (k, beta, mu) is globally
// smooth at this level. mu_threshold: every signal that is globally smooth at
// level eta lies in the tail class with this mu; undefined when the k-th
// eigenvalue equals one.
double smoothness_level_for_tail_class(const BltParams& p, double alpha2,
                                       double lambda_k_minus_1);
std::optional<double> tail_bound_for_smooth_class(double eta, const BltParams& p,
                                                  double alpha1, double lambda_k, int n);

struct InclusionThresholds {
  double eta_threshold = 0.0;
  std::optional<double> mu_threshold;
};
InclusionThresholds class_inclusion_thresholds(const SpectralBasis& basis, const BltParams& p,
                                               double eta);

// Random test signal in the tail-bounded class: components below k are drawn
// from Normal(1, variance 0.5), the tail decays as (k/j)^(2*beta), and the
// spectrum is scaled to unit norm before transforming to the vertex domain.
struct BltSignal {
  GraphSignal x;
  SpectrumVector xhat_true;
};
BltSignal generate_blt_signal(const SpectralBasis& basis, int k, double beta,
                              std::uint64_t seed);

// Single-column text format with the length as header.
void save_signal(const GraphSignal& x, const std::string& path);
GraphSignal load_signal(const std::string& path);

}  // namespace gsp
