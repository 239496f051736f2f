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

#include <Eigen/Core>
#include <string>
#include <utility>

#include "core/graph.hpp"

namespace gsp {

using GraphSignal = Eigen::VectorXd;     // vertex-domain coefficients
using SpectrumVector = Eigen::VectorXd;  // frequency-domain coefficients

// Eigendecomposition of a normalized symmetric shift. Columns of `v` are the
// eigenvectors (inverse-transform basis); `u = v^T` is the forward transform.
// Eigenvalues are sorted descending in [-1, 1]. Each eigenvector's sign is
// fixed so its first nonzero component is positive, and repeated eigenvalues
// are ordered by the lexicographic order of their (sign-fixed) eigenvectors,
// which makes the decomposition reproducible.
struct SpectralBasis {
  int n = 0;
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd v;       // inverse transform, columns v_k
  Eigen::MatrixXd u;       // forward transform, rows u_k
  double alpha1 = 0.0;     // lower frame bound of v: sigma_min(v)^2
  double alpha2 = 0.0;     // upper frame bound of v: sigma_max(v)^2
};

// Per-node selection probabilities proportional to the 2-norm (not the
// squared norm) of each column of the first-kappa-rows block of `u`.
// Entries sum to one.
struct SamplingScores {
  Eigen::VectorXd scores;
  int kappa = 0;
};

SpectralBasis decompose(const GraphShift& a);

// Forward transform xhat = u * x and inverse x = v * xhat.
SpectrumVector gft(const SpectralBasis& basis, const GraphSignal& x);
GraphSignal igft(const SpectralBasis& basis, const SpectrumVector& xhat);

// Tight frame bounds (squared extreme singular values) of a basis matrix.
std::pair<double, double> riesz_constants(const Eigen::MatrixXd& v);

SamplingScores sampling_scores(const SpectralBasis& basis, int kappa);

// Norm functionals of the first-kappa-rows block of `u`: the squared
// Frobenius norm and the squared (2,1) mixed norm (sum of column norms,
// squared). These drive the worst-case recovery bounds.
struct NormFunctionals {
  double frob_sq = 0.0;
  double l21_sq = 0.0;
};
NormFunctionals norm_functionals(const SpectralBasis& basis, int kappa);

// Flat-transform test: max |u_ij| * sqrt(n) against the constant c. Graphs
// that pass spread transform energy evenly over nodes, so uniform and
// score-weighted sampling behave alike.
struct Type1Result {
  bool is_type1 = false;
  double max_entry_scaled = 0.0;
};
Type1Result classify_type1(const SpectralBasis& basis, double c = 3.0);

// Score-concentration test. For a cutoff K, h_i is the column norm of the
// first-K-rows block of `u`, T indexes the K largest h (ties to the lower
// index), and the condition is l1(h off T) <= alpha * l1(h on T).
// `classify_type2` requires the condition for every K in [k0, n];
// `classify_type2_general` checks the single cutoff K = k0. Both report the
// worst ratio seen.
struct Type2Result {
  bool is_type2 = false;
  double worst_ratio = 0.0;
};
Type2Result classify_type2(const SpectralBasis& basis, int k0, double alpha);
Type2Result classify_type2_general(const SpectralBasis& basis, int k0, double alpha);

// Columnar text export: node count, eigenvalue row, then `u` row-major.
void save_basis(const SpectralBasis& basis, const std::string& path);

}  // namespace gsp
