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

#include "graphsample.h"

#include <cstring>
#include <exception>
#include <string>

#include "core/errors.hpp"
#include "core/experiment.hpp"
#include "core/graph.hpp"
#include "core/recovery.hpp"
#include "core/sampler.hpp"
#include "core/signal_model.hpp"
#include "core/spectral.hpp"
#include "core/theory_bounds.hpp"

struct gs_graph {
  gsp::GraphShift impl;
};
struct gs_basis {
  gsp::SpectralBasis impl;
};
struct gs_vector {
  Eigen::VectorXd impl;
  int kappa = 0;  // set when the vector holds sampling scores
};
struct gs_samples {
  gsp::SampleSet impl;
};
struct gs_curve {
  gsp::MseCurve impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* message) { g_last_error = message ? message : ""; }

gs_status translate_exception() {
  try {
    throw;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return GS_ERROR_INVALID_ARGUMENT;
  } catch (const gsp::ParseError& e) {
    set_error(e.what());
    return GS_ERROR_PARSE;
  } catch (const gsp::IoError& e) {
    set_error(e.what());
    return GS_ERROR_IO;
  } catch (const std::exception& e) {
    set_error(e.what());
    return GS_ERROR_NUMERIC;
  } catch (...) {
    set_error("unknown error");
    return GS_ERROR_NUMERIC;
  }
}

gs_status null_argument(const char* what) {
  set_error((std::string(what) + " must not be null").c_str());
  return GS_ERROR_NULL_ARGUMENT;
}

gs_status recovery_out(gsp::RecoveryResult&& result, gs_vector** x_star, gs_vector** xhat_star,
                       int* rank_deficient) {
  auto* vx = new gs_vector;
  vx->impl = std::move(result.x_star);
  *x_star = vx;
  if (xhat_star) {
    auto* vh = new gs_vector;
    vh->impl = std::move(result.xhat_star);
    *xhat_star = vh;
  }
  if (rank_deficient) *rank_deficient = result.rank_deficient ? 1 : 0;
  return GS_OK;
}

gsp::BoundInputs to_core(const gs_bound_inputs& in) {
  gsp::BoundInputs out;
  out.alpha2 = in.alpha2;
  out.mu = in.mu;
  out.signal_norm_sq = in.signal_norm_sq;
  out.max_coeff_sq = in.max_coeff_sq;
  out.sigma_sq = in.sigma_sq;
  out.kappa = in.kappa;
  out.beta = in.beta;
  out.m = in.m;
  out.frob_sq = in.frob_sq;
  out.l21_sq = in.l21_sq;
  out.n = in.n;
  return out;
}

const gsp::MseSeries* series_of(const gs_curve* curve, gs_strategy strategy) {
  return strategy == GS_STRATEGY_DESIGNED ? &curve->impl.designed : &curve->impl.random;
}

}  // namespace

extern "C" {

const char* gs_status_name(gs_status status) {
  switch (status) {
    case GS_OK:
      return "ok";
    case GS_ERROR_NULL_ARGUMENT:
      return "null argument";
    case GS_ERROR_INVALID_ARGUMENT:
      return "invalid argument";
    case GS_ERROR_PARSE:
      return "parse error";
    case GS_ERROR_IO:
      return "io error";
    case GS_ERROR_NUMERIC:
      return "numeric error";
  }
  return "unknown";
}

const char* gs_last_error(void) { return g_last_error.c_str(); }

const char* gs_version(void) { return "0.1.0"; }

void gs_graph_free(gs_graph* graph) { delete graph; }
void gs_basis_free(gs_basis* basis) { delete basis; }
void gs_vector_free(gs_vector* vector) { delete vector; }
void gs_samples_free(gs_samples* samples) { delete samples; }
void gs_curve_free(gs_curve* curve) { delete curve; }

/* ------------------------------------------------------------------ */
/* Graphs                                                              */

gs_status gs_graph_build_ring(int n, int k, gs_graph** out) {
  if (!out) return null_argument("out");
  try {
    *out = new gs_graph{gsp::build_ring_knn(n, k)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_graph_build_erdos_renyi(int n, double p, uint64_t seed, gs_graph** out) {
  if (!out) return null_argument("out");
  try {
    *out = new gs_graph{gsp::build_erdos_renyi(n, p, seed)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_graph_build_star(int n, gs_graph** out) {
  if (!out) return null_argument("out");
  try {
    *out = new gs_graph{gsp::build_star(n)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_graph_normalize(const gs_graph* graph, gs_graph** out) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  try {
    *out = new gs_graph{gsp::normalize_shift(graph->impl)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

int gs_graph_num_nodes(const gs_graph* graph) { return graph ? graph->impl.n : 0; }

int gs_graph_is_normalized(const gs_graph* graph) {
  return graph && graph->impl.normalized ? 1 : 0;
}

gs_status gs_graph_weights(const gs_graph* graph, double* out) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  const auto& w = graph->impl.weights;
  for (int i = 0; i < graph->impl.n; ++i)
    for (int j = 0; j < graph->impl.n; ++j)
      out[static_cast<std::size_t>(i) * graph->impl.n + j] = w(i, j);
  return GS_OK;
}

gs_status gs_graph_load(const char* path, gs_graph** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  try {
    *out = new gs_graph{gsp::load_edge_list(path)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_graph_save(const gs_graph* graph, const char* path) {
  if (!graph) return null_argument("graph");
  if (!path) return null_argument("path");
  try {
    gsp::save_edge_list(graph->impl, path);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

/* ------------------------------------------------------------------ */
/* Vectors                                                             */

gs_status gs_vector_create(const double* data, int n, gs_vector** out) {
  if (!data) return null_argument("data");
  if (!out) return null_argument("out");
  if (n < 1) {
    set_error("vector length must be positive");
    return GS_ERROR_INVALID_ARGUMENT;
  }
  auto* v = new gs_vector;
  v->impl = Eigen::Map<const Eigen::VectorXd>(data, n);
  *out = v;
  return GS_OK;
}

int gs_vector_size(const gs_vector* vector) {
  return vector ? static_cast<int>(vector->impl.size()) : 0;
}

gs_status gs_vector_copy_data(const gs_vector* vector, double* out) {
  if (!vector) return null_argument("vector");
  if (!out) return null_argument("out");
  std::memcpy(out, vector->impl.data(), sizeof(double) * vector->impl.size());
  return GS_OK;
}

gs_status gs_vector_save(const gs_vector* vector, const char* path) {
  if (!vector) return null_argument("vector");
  if (!path) return null_argument("path");
  try {
    gsp::save_signal(vector->impl, path);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_vector_load(const char* path, gs_vector** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  try {
    auto* v = new gs_vector;
    v->impl = gsp::load_signal(path);
    *out = v;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

/* ------------------------------------------------------------------ */
/* Basis                                                               */

gs_status gs_basis_compute(const gs_graph* graph, gs_basis** out) {
  if (!graph) return null_argument("graph");
  if (!out) return null_argument("out");
  try {
    *out = new gs_basis{gsp::decompose(graph->impl)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

int gs_basis_size(const gs_basis* basis) { return basis ? basis->impl.n : 0; }

gs_status gs_basis_eigenvalues(const gs_basis* basis, double* out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  std::memcpy(out, basis->impl.eigenvalues.data(), sizeof(double) * basis->impl.n);
  return GS_OK;
}

gs_status gs_basis_gft_matrix(const gs_basis* basis, double* out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  const int n = basis->impl.n;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(k) * n + i] = basis->impl.u(k, i);
  return GS_OK;
}

gs_status gs_basis_igft_matrix(const gs_basis* basis, double* out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  const int n = basis->impl.n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(i) * n + k] = basis->impl.v(i, k);
  return GS_OK;
}

gs_status gs_basis_riesz_constants(const gs_basis* basis, double* alpha1, double* alpha2) {
  if (!basis) return null_argument("basis");
  if (!alpha1 || !alpha2) return null_argument("alpha output");
  *alpha1 = basis->impl.alpha1;
  *alpha2 = basis->impl.alpha2;
  return GS_OK;
}

gs_status gs_basis_save(const gs_basis* basis, const char* path) {
  if (!basis) return null_argument("basis");
  if (!path) return null_argument("path");
  try {
    gsp::save_basis(basis->impl, path);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_gft(const gs_basis* basis, const gs_vector* x, gs_vector** xhat) {
  if (!basis) return null_argument("basis");
  if (!x) return null_argument("x");
  if (!xhat) return null_argument("xhat");
  try {
    auto* v = new gs_vector;
    v->impl = gsp::gft(basis->impl, x->impl);
    *xhat = v;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_igft(const gs_basis* basis, const gs_vector* xhat, gs_vector** x) {
  if (!basis) return null_argument("basis");
  if (!xhat) return null_argument("xhat");
  if (!x) return null_argument("x");
  try {
    auto* v = new gs_vector;
    v->impl = gsp::igft(basis->impl, xhat->impl);
    *x = v;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_sampling_scores(const gs_basis* basis, int kappa, gs_vector** out) {
  if (!basis) return null_argument("basis");
  if (!out) return null_argument("out");
  try {
    const gsp::SamplingScores scores = gsp::sampling_scores(basis->impl, kappa);
    auto* v = new gs_vector;
    v->impl = scores.scores;
    v->kappa = scores.kappa;
    *out = v;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_norm_functionals(const gs_basis* basis, int kappa, double* frob_sq,
                              double* l21_sq) {
  if (!basis) return null_argument("basis");
  if (!frob_sq || !l21_sq) return null_argument("norm output");
  try {
    const gsp::NormFunctionals norms = gsp::norm_functionals(basis->impl, kappa);
    *frob_sq = norms.frob_sq;
    *l21_sq = norms.l21_sq;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_classify_type1(const gs_basis* basis, double c, int* is_type1,
                            double* max_entry_scaled) {
  if (!basis) return null_argument("basis");
  if (!is_type1 || !max_entry_scaled) return null_argument("result output");
  try {
    const gsp::Type1Result result = gsp::classify_type1(basis->impl, c);
    *is_type1 = result.is_type1 ? 1 : 0;
    *max_entry_scaled = result.max_entry_scaled;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_classify_type2(const gs_basis* basis, int k0, double alpha, int sweep,
                            int* is_type2, double* worst_ratio) {
  if (!basis) return null_argument("basis");
  if (!is_type2 || !worst_ratio) return null_argument("result output");
  try {
    const gsp::Type2Result result = sweep ? gsp::classify_type2(basis->impl, k0, alpha)
                                          : gsp::classify_type2_general(basis->impl, k0, alpha);
    *is_type2 = result.is_type2 ? 1 : 0;
    *worst_ratio = result.worst_ratio;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

/* ------------------------------------------------------------------ */
/* Signal model                                                        */

gs_status gs_global_smoothness(const gs_graph* graph, const gs_vector* x, double* eta) {
  if (!graph) return null_argument("graph");
  if (!x) return null_argument("x");
  if (!eta) return null_argument("eta");
  try {
    *eta = gsp::global_smoothness(graph->impl, x->impl);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_blt_residual(const gs_basis* basis, const gs_vector* x, int k, double beta,
                          double* mu) {
  if (!basis) return null_argument("basis");
  if (!x) return null_argument("x");
  if (!mu) return null_argument("mu");
  try {
    *mu = gsp::blt_residual(basis->impl, x->impl, k, beta);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_is_bandlimited(const gs_basis* basis, const gs_vector* x, int k, double tol,
                            int* out) {
  if (!basis) return null_argument("basis");
  if (!x) return null_argument("x");
  if (!out) return null_argument("out");
  try {
    *out = gsp::is_bandlimited(basis->impl, x->impl, k, tol) ? 1 : 0;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_class_inclusion_thresholds(const gs_basis* basis, int k, double beta, double mu,
                                        double eta, double* eta_threshold, double* mu_threshold,
                                        int* mu_defined) {
  if (!basis) return null_argument("basis");
  if (!eta_threshold || !mu_threshold || !mu_defined) return null_argument("threshold output");
  try {
    const gsp::InclusionThresholds thresholds =
        gsp::class_inclusion_thresholds(basis->impl, gsp::BltParams{k, beta, mu}, eta);
    *eta_threshold = thresholds.eta_threshold;
    *mu_defined = thresholds.mu_threshold.has_value() ? 1 : 0;
    *mu_threshold = thresholds.mu_threshold.value_or(0.0);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_generate_blt_signal(const gs_basis* basis, int k, double beta, uint64_t seed,
                                 gs_vector** x, gs_vector** xhat_true) {
  if (!basis) return null_argument("basis");
  if (!x) return null_argument("x");
  try {
    gsp::BltSignal signal = gsp::generate_blt_signal(basis->impl, k, beta, seed);
    auto* vx = new gs_vector;
    vx->impl = std::move(signal.x);
    *x = vx;
    if (xhat_true) {
      auto* vh = new gs_vector;
      vh->impl = std::move(signal.xhat_true);
      *xhat_true = vh;
    }
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

/* ------------------------------------------------------------------ */
/* Sampling                                                            */

gs_status gs_sample_uniform(const gs_vector* x, int m, double sigma, uint64_t seed,
                            gs_samples** out) {
  if (!x) return null_argument("x");
  if (!out) return null_argument("out");
  try {
    *out = new gs_samples{gsp::sample_uniform(x->impl, m, sigma, seed)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_sample_scored(const gs_vector* x, const gs_vector* scores, int m, double sigma,
                           uint64_t seed, gs_samples** out) {
  if (!x) return null_argument("x");
  if (!scores) return null_argument("scores");
  if (!out) return null_argument("out");
  try {
    gsp::SamplingScores s{scores->impl, scores->kappa};
    *out = new gs_samples{gsp::sample_scored(x->impl, s, m, sigma, seed)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

int gs_samples_count(const gs_samples* samples) {
  return samples ? static_cast<int>(samples->impl.indices.size()) : 0;
}

gs_status gs_samples_indices(const gs_samples* samples, int* out) {
  if (!samples) return null_argument("samples");
  if (!out) return null_argument("out");
  std::memcpy(out, samples->impl.indices.data(), sizeof(int) * samples->impl.indices.size());
  return GS_OK;
}

gs_status gs_samples_measurements(const gs_samples* samples, double* out) {
  if (!samples) return null_argument("samples");
  if (!out) return null_argument("out");
  std::memcpy(out, samples->impl.measurements.data(),
              sizeof(double) * samples->impl.measurements.size());
  return GS_OK;
}

gs_status gs_samples_probs(const gs_samples* samples, double* out) {
  if (!samples) return null_argument("samples");
  if (!out) return null_argument("out");
  std::memcpy(out, samples->impl.probs.data(), sizeof(double) * samples->impl.probs.size());
  return GS_OK;
}

gs_status gs_samples_save_csv(const gs_samples* samples, const char* path) {
  if (!samples) return null_argument("samples");
  if (!path) return null_argument("path");
  try {
    gsp::save_samples_csv(samples->impl, path);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

/* ------------------------------------------------------------------ */
/* Recovery                                                            */

gs_status gs_recover_random(const gs_basis* basis, const gs_samples* samples, int kappa,
                            gs_vector** x_star, gs_vector** xhat_star) {
  if (!basis) return null_argument("basis");
  if (!samples) return null_argument("samples");
  if (!x_star) return null_argument("x_star");
  try {
    return recovery_out(gsp::recover_random(basis->impl, samples->impl, kappa), x_star,
                        xhat_star, nullptr);
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_recover_designed(const gs_basis* basis, const gs_samples* samples, int kappa,
                              gs_vector** x_star, gs_vector** xhat_star) {
  if (!basis) return null_argument("basis");
  if (!samples) return null_argument("samples");
  if (!x_star) return null_argument("x_star");
  try {
    return recovery_out(gsp::recover_designed(basis->impl, samples->impl, kappa), x_star,
                        xhat_star, nullptr);
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_recover_least_squares(const gs_basis* basis, const gs_samples* samples, int k,
                                   gs_vector** x_star, gs_vector** xhat_star,
                                   int* rank_deficient) {
  if (!basis) return null_argument("basis");
  if (!samples) return null_argument("samples");
  if (!x_star) return null_argument("x_star");
  try {
    return recovery_out(gsp::recover_least_squares(basis->impl, samples->impl, k), x_star,
                        xhat_star, rank_deficient);
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_linear_approx(const gs_basis* basis, const gs_vector* x, int k, gs_vector** out) {
  if (!basis) return null_argument("basis");
  if (!x) return null_argument("x");
  if (!out) return null_argument("out");
  try {
    auto* v = new gs_vector;
    v->impl = gsp::linear_approx(basis->impl, x->impl, k);
    *out = v;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_mse(const gs_vector* a, const gs_vector* b, double* out) {
  if (!a || !b) return null_argument("vector");
  if (!out) return null_argument("out");
  try {
    *out = gsp::mse(a->impl, b->impl);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

/* ------------------------------------------------------------------ */
/* Bounds and rates                                                    */

gs_status gs_bound_random(const gs_bound_inputs* inputs, double* out) {
  if (!inputs) return null_argument("inputs");
  if (!out) return null_argument("out");
  try {
    *out = gsp::bound_random(to_core(*inputs));
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_bound_designed(const gs_bound_inputs* inputs, double* out) {
  if (!inputs) return null_argument("inputs");
  if (!out) return null_argument("out");
  try {
    *out = gsp::bound_designed(to_core(*inputs));
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_optimal_kappa(double beta, int m, int n, int use_gamma, double gamma, int* kappa) {
  if (!kappa) return null_argument("kappa");
  try {
    gsp::RateSpec rate;
    rate.kind = use_gamma ? gsp::RateSpec::Kind::kType2 : gsp::RateSpec::Kind::kType1;
    rate.gamma = gamma;
    *kappa = gsp::optimal_kappa(beta, m, n, rate);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_gamma_interval(double beta, int m, int n, int k, int k0, double* lo, double* hi) {
  if (!lo || !hi) return null_argument("interval output");
  try {
    const gsp::GammaInterval interval = gsp::gamma_interval(beta, m, n, k, k0);
    *lo = interval.lo;
    *hi = interval.hi;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

/* ------------------------------------------------------------------ */
/* Experiment harness                                                  */

void gs_experiment_config_init(gs_experiment_config* config) {
  if (!config) return;
  config->family = GS_GRAPH_RING;
  config->n = 64;
  config->ring_k = 4;
  config->er_p = 0.2;
  config->graph_seed = 1;
  config->signal_k = 10;
  config->signal_beta = 1.0;
  config->sigma_sq = 0.01;
  config->schedule = GS_KAPPA_FIXED;
  config->kappa = 10;
  config->gamma = 1.0;
  config->sample_sizes = nullptr;
  config->num_sample_sizes = 0;
  config->trials = 50;
  config->seed = 1;
}

gs_status gs_experiment_run(const gs_experiment_config* config, gs_curve** out) {
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  if (!config->sample_sizes && config->num_sample_sizes > 0)
    return null_argument("config->sample_sizes");
  try {
    gsp::ExperimentConfig core;
    switch (config->family) {
      case GS_GRAPH_RING:
        core.graph.family = gsp::GraphSpec::Family::kRing;
        break;
      case GS_GRAPH_ERDOS_RENYI:
        core.graph.family = gsp::GraphSpec::Family::kErdosRenyi;
        break;
      case GS_GRAPH_STAR:
        core.graph.family = gsp::GraphSpec::Family::kStar;
        break;
      default:
        set_error("unknown graph family");
        return GS_ERROR_INVALID_ARGUMENT;
    }
    core.graph.n = config->n;
    core.graph.ring_k = config->ring_k;
    core.graph.er_p = config->er_p;
    core.graph.er_seed = config->graph_seed;
    core.signal_k = config->signal_k;
    core.signal_beta = config->signal_beta;
    core.sigma_sq = config->sigma_sq;
    switch (config->schedule) {
      case GS_KAPPA_FIXED:
        core.kappa.kind = gsp::KappaSchedule::Kind::kFixed;
        break;
      case GS_KAPPA_RATE_TYPE1:
        core.kappa.kind = gsp::KappaSchedule::Kind::kRateType1;
        break;
      case GS_KAPPA_RATE_TYPE2:
        core.kappa.kind = gsp::KappaSchedule::Kind::kRateType2;
        break;
      default:
        set_error("unknown bandwidth schedule");
        return GS_ERROR_INVALID_ARGUMENT;
    }
    core.kappa.kappa = config->kappa;
    core.kappa.gamma = config->gamma;
    core.sample_sizes.assign(config->sample_sizes,
                             config->sample_sizes + config->num_sample_sizes);
    core.trials = config->trials;
    core.seed = config->seed;
    *out = new gs_curve{gsp::run_experiment(core)};
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

int gs_curve_num_sizes(const gs_curve* curve) {
  return curve ? static_cast<int>(curve->impl.sample_sizes.size()) : 0;
}

gs_status gs_curve_sample_sizes(const gs_curve* curve, int* out) {
  if (!curve) return null_argument("curve");
  if (!out) return null_argument("out");
  std::memcpy(out, curve->impl.sample_sizes.data(),
              sizeof(int) * curve->impl.sample_sizes.size());
  return GS_OK;
}

gs_status gs_curve_kappas(const gs_curve* curve, int* out) {
  if (!curve) return null_argument("curve");
  if (!out) return null_argument("out");
  std::memcpy(out, curve->impl.kappas.data(), sizeof(int) * curve->impl.kappas.size());
  return GS_OK;
}

gs_status gs_curve_mean(const gs_curve* curve, gs_strategy strategy, double* out) {
  if (!curve) return null_argument("curve");
  if (!out) return null_argument("out");
  const auto* series = series_of(curve, strategy);
  std::memcpy(out, series->mean.data(), sizeof(double) * series->mean.size());
  return GS_OK;
}

gs_status gs_curve_std_err(const gs_curve* curve, gs_strategy strategy, double* out) {
  if (!curve) return null_argument("curve");
  if (!out) return null_argument("out");
  const auto* series = series_of(curve, strategy);
  std::memcpy(out, series->std_err.data(), sizeof(double) * series->std_err.size());
  return GS_OK;
}

gs_status gs_curve_bound(const gs_curve* curve, gs_strategy strategy, double* out) {
  if (!curve) return null_argument("curve");
  if (!out) return null_argument("out");
  const auto* series = series_of(curve, strategy);
  std::memcpy(out, series->mean_bound.data(), sizeof(double) * series->mean_bound.size());
  return GS_OK;
}

gs_status gs_curve_floor(const gs_curve* curve, double* out) {
  if (!curve) return null_argument("curve");
  if (!out) return null_argument("out");
  *out = curve->impl.floor;
  return GS_OK;
}

gs_status gs_curve_save_csv(const gs_curve* curve, const char* path) {
  if (!curve) return null_argument("curve");
  if (!path) return null_argument("path");
  try {
    gsp::emit_csv(curve->impl, path);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_curve_save_plot(const gs_curve* curve, const char* path) {
  if (!curve) return null_argument("curve");
  if (!path) return null_argument("path");
  try {
    gsp::emit_plot_data(curve->impl, path);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_curve_save_bounds_csv(const gs_curve* curve, const char* path) {
  if (!curve) return null_argument("curve");
  if (!path) return null_argument("path");
  try {
    gsp::emit_bounds_csv(curve->impl, path);
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_curve_fit_rate(const gs_curve* curve, gs_strategy strategy, double* slope,
                            double* intercept, double* r2) {
  if (!curve) return null_argument("curve");
  if (!slope || !intercept || !r2) return null_argument("fit output");
  try {
    const auto* series = series_of(curve, strategy);
    const gsp::RateFit fit = gsp::fit_rate(curve->impl.sample_sizes, series->mean);
    *slope = fit.slope;
    *intercept = fit.intercept;
    *r2 = fit.r2;
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

gs_status gs_curve_compare(const gs_curve* curve, gs_compare_verdict* verdict, double* ratios) {
  if (!curve) return null_argument("curve");
  if (!verdict) return null_argument("verdict");
  try {
    const gsp::CompareReport report =
        gsp::compare_strategies(gsp::strategy_curve(curve->impl, false),
                                gsp::strategy_curve(curve->impl, true));
    switch (report.verdict) {
      case gsp::CompareReport::Verdict::kSimilar:
        *verdict = GS_COMPARE_SIMILAR;
        break;
      case gsp::CompareReport::Verdict::kABetter:
        *verdict = GS_COMPARE_RANDOM_BETTER;
        break;
      case gsp::CompareReport::Verdict::kBBetter:
        *verdict = GS_COMPARE_DESIGNED_BETTER;
        break;
    }
    if (ratios)
      std::memcpy(ratios, report.ratios.data(), sizeof(double) * report.ratios.size());
    return GS_OK;
  } catch (...) {
    return translate_exception();
  }
}

} /* extern "C" */
