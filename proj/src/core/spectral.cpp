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

#include "core/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "core/textio.hpp"

namespace gsp {

namespace {

constexpr double kSignZeroTol = 1e-12;
constexpr double kEigenvalueTieTol = 1e-9;

void canonicalize_sign(Eigen::Ref<Eigen::VectorXd> column) {
  for (Eigen::Index i = 0; i < column.size(); ++i) {
    if (std::abs(column(i)) > kSignZeroTol) {
      if (column(i) < 0.0) column = -column;
      return;
    }
  }
}

bool lex_less(const Eigen::MatrixXd& m, Eigen::Index a, Eigen::Index b) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (m(i, a) < m(i, b)) return true;
    if (m(i, a) > m(i, b)) return false;
  }
  return false;
}

void check_kappa(int kappa, int n) {
  if (kappa < 1 || kappa > n)
    throw std::invalid_argument("bandwidth " + std::to_string(kappa) +
                                " out of range [1, " + std::to_string(n) + "]");
}

}  // namespace

SpectralBasis decompose(const GraphShift& a) {
  if (a.n < 1 || a.weights.rows() != a.n || a.weights.cols() != a.n)
    throw std::invalid_argument("graph shift has inconsistent dimensions");
  if (!a.normalized)
    throw std::invalid_argument("decompose requires a normalized shift");
  if ((a.weights - a.weights.transpose()).cwiseAbs().maxCoeff() != 0.0)
    throw std::invalid_argument("decompose requires a symmetric shift");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.weights);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed to converge");

  Eigen::MatrixXd vectors = solver.eigenvectors();
  const Eigen::VectorXd values = solver.eigenvalues();  // ascending
  for (Eigen::Index k = 0; k < vectors.cols(); ++k) canonicalize_sign(vectors.col(k));

  // Descending eigenvalue order, ties resolved by eigenvector lexicographic
  // order so repeated eigenvalues come out the same way every run.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(a.n));
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() &&
           std::abs(values(order[end]) - values(order[start])) <= kEigenvalueTieTol)
      ++end;
    std::sort(order.begin() + start, order.begin() + end,
              [&](Eigen::Index x, Eigen::Index y) { return lex_less(vectors, x, y); });
    start = end;
  }

  SpectralBasis basis;
  basis.n = a.n;
  basis.eigenvalues.resize(a.n);
  basis.v.resize(a.n, a.n);
  for (int k = 0; k < a.n; ++k) {
    basis.eigenvalues(k) = values(order[k]);
    basis.v.col(k) = vectors.col(order[k]);
  }
  basis.u = basis.v.transpose();
  const auto bounds = riesz_constants(basis.v);
  basis.alpha1 = bounds.first;
  basis.alpha2 = bounds.second;
  return basis;
}

SpectrumVector gft(const SpectralBasis& basis, const GraphSignal& x) {
  if (x.size() != basis.n)
    throw std::invalid_argument("signal length " + std::to_string(x.size()) +
                                " does not match basis size " + std::to_string(basis.n));
  return basis.u * x;
}

GraphSignal igft(const SpectralBasis& basis, const SpectrumVector& xhat) {
  if (xhat.size() != basis.n)
    throw std::invalid_argument("spectrum length " + std::to_string(xhat.size()) +
                                " does not match basis size " + std::to_string(basis.n));
  return basis.v * xhat;
}

std::pair<double, double> riesz_constants(const Eigen::MatrixXd& v) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(v);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  const double smin = sv(sv.size() - 1);
  return {smin * smin, smax * smax};
}

SamplingScores sampling_scores(const SpectralBasis& basis, int kappa) {
  check_kappa(kappa, basis.n);
  Eigen::VectorXd norms = basis.u.topRows(kappa).colwise().norm();
  const double total = norms.sum();
  if (!(total > 0.0)) throw std::runtime_error("transform block is identically zero");
  Eigen::VectorXd w = norms / total;
  w /= w.sum();  // absorb rounding so the scores sum to one
  return SamplingScores{std::move(w), kappa};
}

NormFunctionals norm_functionals(const SpectralBasis& basis, int kappa) {
  check_kappa(kappa, basis.n);
  const auto block = basis.u.topRows(kappa);
  NormFunctionals out;
  out.frob_sq = block.squaredNorm();
  const double col_norm_sum = block.colwise().norm().sum();
  out.l21_sq = col_norm_sum * col_norm_sum;
  return out;
}

Type1Result classify_type1(const SpectralBasis& basis, double c) {
  Type1Result out;
  out.max_entry_scaled = basis.u.cwiseAbs().maxCoeff() * std::sqrt(static_cast<double>(basis.n));
  out.is_type1 = out.max_entry_scaled <= c;
  return out;
}

namespace {

// Ratio l1(h off T) / l1(h on T) for one cutoff, given the per-node scores h.
double concentration_ratio(const Eigen::VectorXd& h, int cutoff) {
  const int n = static_cast<int>(h.size());
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (h(a) != h(b)) return h(a) > h(b);
    return a < b;
  });
  double on = 0.0, off = 0.0;
  for (int r = 0; r < n; ++r) (r < cutoff ? on : off) += h(idx[r]);
  if (off == 0.0) return 0.0;
  return off / on;
}

Type2Result classify_type2_impl(const SpectralBasis& basis, int k0, double alpha, bool sweep) {
  check_kappa(k0, basis.n);
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  Type2Result out;
  out.is_type2 = true;
  Eigen::VectorXd h_sq = Eigen::VectorXd::Zero(basis.n);
  int row = 0;
  const int last = sweep ? basis.n : k0;
  for (int cutoff = 1; cutoff <= last; ++cutoff) {
    for (; row < cutoff; ++row) h_sq += basis.u.row(row).cwiseAbs2().transpose();
    if (cutoff < k0) continue;
    const double ratio = concentration_ratio(h_sq.cwiseSqrt(), cutoff);
    out.worst_ratio = std::max(out.worst_ratio, ratio);
    if (ratio > alpha) out.is_type2 = false;
  }
  return out;
}

}  // namespace

Type2Result classify_type2(const SpectralBasis& basis, int k0, double alpha) {
  return classify_type2_impl(basis, k0, alpha, true);
}

Type2Result classify_type2_general(const SpectralBasis& basis, int k0, double alpha) {
  return classify_type2_impl(basis, k0, alpha, false);
}

void save_basis(const SpectralBasis& basis, const std::string& path) {
  auto out = textio::open_output(path);
  out << basis.n << "\n";
  for (int k = 0; k < basis.n; ++k) {
    if (k) out << ' ';
    out << textio::format_double(basis.eigenvalues(k));
  }
  out << "\n";
  for (int k = 0; k < basis.n; ++k) {
    for (int i = 0; i < basis.n; ++i) {
      if (i) out << ' ';
      out << textio::format_double(basis.u(k, i));
    }
    out << "\n";
  }
  textio::finish_output(out, path);
}

}  // namespace gsp
