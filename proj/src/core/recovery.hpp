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

#include <string>

#include "core/sampler.hpp"
#include "core/spectral.hpp"

namespace gsp {

enum class RecoveryMethod { kRandomUniform, kDesigned, kLeastSquares, kLinearApprox };

struct RecoveryResult {
  GraphSignal x_star;         // recovered vertex-domain signal
  SpectrumVector xhat_star;   // estimated low-frequency components, length kappa
  int kappa = 0;
  RecoveryMethod method = RecoveryMethod::kRandomUniform;
  bool rank_deficient = false;  // least-squares only
};

// Inverse-probability estimate of the first kappa frequency components from
// uniformly drawn samples:
//   xhat_k = (1/m) sum_t y_t u(k, node_t) / p_t     with p_t = 1/n,
// reconstructed as x = sum_{k < kappa} xhat_k v_k. Requires the sample set's
// recorded probabilities to be uniform.
RecoveryResult recover_random(const SpectralBasis& basis, const SampleSet& samples, int kappa);

// Same estimate for score-weighted draws (p_t = score of the drawn node).
// The recorded probabilities must match the scores this basis produces at
// this bandwidth; a mismatch means the samples were drawn for a different
// pairing and the estimate would be skewed.
RecoveryResult recover_designed(const SpectralBasis& basis, const SampleSet& samples, int kappa);

// Minimum-norm least squares on the first k basis vectors,
// x = V_k pinv(Psi V_k) y, with singular values below 1e-10 * sigma_max
// treated as zero. Rank deficiency is flagged, not fatal.
RecoveryResult recover_least_squares(const SpectralBasis& basis, const SampleSet& samples, int k);

// Projection onto the first k basis vectors: V_k U_k x. This is what both
// sampling estimators recover on average.
GraphSignal linear_approx(const SpectralBasis& basis, const GraphSignal& x, int k);

// Squared recovery error ||x_star - x||^2.
double mse(const GraphSignal& x, const GraphSignal& x_star);

// CSV with header `index,x_star,xhat_star`; the spectrum column is
// zero-padded to the signal length.
void save_recovery_csv(const RecoveryResult& result, const std::string& path);

}  // namespace gsp
