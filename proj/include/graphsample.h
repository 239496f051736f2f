/*
 * Copyright 2026 the graphsample authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the graphsample library.
 *
 * graphsample builds graph shift operators, computes their Fourier bases,
 * generates approximately bandlimited test signals, samples them uniformly or
 * with score-weighted probabilities, recovers the low-frequency components
 * with unbiased inverse-probability estimators, and evaluates the matching
 * worst-case error bounds and convergence rates through a Monte Carlo
 * experiment harness.
 *
 * All objects are opaque handles created through gs_* constructors and
 * released with the matching gs_*_free. Functions return GS_OK on success;
 * on failure they return an error code and leave a human-readable message
 * in gs_last_error() (thread-local). Output parameters are written only on
 * success.
 */

#ifndef GRAPHSAMPLE_H
#define GRAPHSAMPLE_H

#include <stdint.h>

#ifdef _WIN32
#define GS_API __declspec(dllexport)
#else
#define GS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_ERROR_NULL_ARGUMENT = 1,
  GS_ERROR_INVALID_ARGUMENT = 2,
  GS_ERROR_PARSE = 3,
  GS_ERROR_IO = 4,
  GS_ERROR_NUMERIC = 5
} gs_status;

GS_API const char* gs_status_name(gs_status status);

/* Message from the most recent failing call on this thread. */
GS_API const char* gs_last_error(void);

GS_API const char* gs_version(void);

/* ------------------------------------------------------------------ */
/* Opaque handles                                                      */

typedef struct gs_graph gs_graph;     /* symmetric weighted adjacency matrix */
typedef struct gs_basis gs_basis;     /* eigendecomposition of a shift */
typedef struct gs_vector gs_vector;   /* vertex- or frequency-domain vector */
typedef struct gs_samples gs_samples; /* drawn indices + noisy measurements */
typedef struct gs_curve gs_curve;     /* Monte Carlo MSE statistics */

GS_API void gs_graph_free(gs_graph* graph);
GS_API void gs_basis_free(gs_basis* basis);
GS_API void gs_vector_free(gs_vector* vector);
GS_API void gs_samples_free(gs_samples* samples);
GS_API void gs_curve_free(gs_curve* curve);

/* ------------------------------------------------------------------ */
/* Graph construction and serialization                                */

/* Ring where each node connects to its k nearest neighbors; k even, < n. */
GS_API gs_status gs_graph_build_ring(int n, int k, gs_graph** out);

/* G(n, p) with unit edge weights; deterministic for a fixed seed. */
GS_API gs_status gs_graph_build_erdos_renyi(int n, double p, uint64_t seed, gs_graph** out);

/* Node 0 as hub connected to all other nodes. */
GS_API gs_status gs_graph_build_star(int n, gs_graph** out);

/* Scales weights so the spectral radius is one. */
GS_API gs_status gs_graph_normalize(const gs_graph* graph, gs_graph** out);

GS_API int gs_graph_num_nodes(const gs_graph* graph);
GS_API int gs_graph_is_normalized(const gs_graph* graph);

/* Copies the dense n*n weight matrix, row-major, into `out`. */
GS_API gs_status gs_graph_weights(const gs_graph* graph, double* out);

/* Text edge list: header line `n [normalized]`, then `i j w` lines. */
GS_API gs_status gs_graph_load(const char* path, gs_graph** out);
GS_API gs_status gs_graph_save(const gs_graph* graph, const char* path);

/* ------------------------------------------------------------------ */
/* Vectors                                                             */

GS_API gs_status gs_vector_create(const double* data, int n, gs_vector** out);
GS_API int gs_vector_size(const gs_vector* vector);
GS_API gs_status gs_vector_copy_data(const gs_vector* vector, double* out);

/* Single-column text format with the length as header. */
GS_API gs_status gs_vector_save(const gs_vector* vector, const char* path);
GS_API gs_status gs_vector_load(const char* path, gs_vector** out);

/* ------------------------------------------------------------------ */
/* Spectral basis                                                      */

/* Eigendecomposition of a normalized symmetric shift. Eigenvalues come out
 * descending in [-1, 1] with a deterministic sign and tie order. */
GS_API gs_status gs_basis_compute(const gs_graph* graph, gs_basis** out);

GS_API int gs_basis_size(const gs_basis* basis);
GS_API gs_status gs_basis_eigenvalues(const gs_basis* basis, double* out);
/* Forward-transform matrix (rows are frequencies), row-major n*n. */
GS_API gs_status gs_basis_gft_matrix(const gs_basis* basis, double* out);
/* Inverse-transform matrix (columns are basis vectors), row-major n*n. */
GS_API gs_status gs_basis_igft_matrix(const gs_basis* basis, double* out);
/* Frame bounds of the inverse transform (both 1 for symmetric shifts). */
GS_API gs_status gs_basis_riesz_constants(const gs_basis* basis, double* alpha1,
                                          double* alpha2);
/* Columnar text export: n, eigenvalue row, forward matrix row-major. */
GS_API gs_status gs_basis_save(const gs_basis* basis, const char* path);

GS_API gs_status gs_gft(const gs_basis* basis, const gs_vector* x, gs_vector** xhat);
GS_API gs_status gs_igft(const gs_basis* basis, const gs_vector* xhat, gs_vector** x);

/* Per-node probabilities proportional to the column norms of the first
 * `kappa` rows of the forward transform; entries sum to one. */
GS_API gs_status gs_sampling_scores(const gs_basis* basis, int kappa, gs_vector** out);

/* Squared Frobenius norm and squared (2,1) norm of that block. */
GS_API gs_status gs_norm_functionals(const gs_basis* basis, int kappa, double* frob_sq,
                                     double* l21_sq);

/* Flat-transform test: max |entry| * sqrt(n) against c. */
GS_API gs_status gs_classify_type1(const gs_basis* basis, double c, int* is_type1,
                                   double* max_entry_scaled);

/* Score-concentration test; sweep=1 checks every cutoff in [k0, n], sweep=0
 * checks the single cutoff k0. */
GS_API gs_status gs_classify_type2(const gs_basis* basis, int k0, double alpha, int sweep,
                                   int* is_type2, double* worst_ratio);

/* ------------------------------------------------------------------ */
/* Signal model                                                        */

/* Smallest eta with ||x - A x||^2 <= eta ||x||^2. */
GS_API gs_status gs_global_smoothness(const gs_graph* graph, const gs_vector* x, double* eta);

/* Smallest mu with sum_{j>=k} (1 + j^(2 beta)) xhat_j^2 <= mu ||x||^2. */
GS_API gs_status gs_blt_residual(const gs_basis* basis, const gs_vector* x, int k, double beta,
                                 double* mu);

GS_API gs_status gs_is_bandlimited(const gs_basis* basis, const gs_vector* x, int k, double tol,
                                   int* out);

/* Class-inclusion thresholds between the tail-bounded class (k, beta, mu)
 * and the global-smoothness class at level eta. mu_defined is 0 when the
 * k-th eigenvalue equals one, which leaves the mu threshold undefined. */
GS_API gs_status gs_class_inclusion_thresholds(const gs_basis* basis, int k, double beta,
                                               double mu, double eta, double* eta_threshold,
                                               double* mu_threshold, int* mu_defined);

/* Random approximately bandlimited signal: components below k drawn from
 * Normal(1, variance 0.5), tail (k/j)^(2 beta), spectrum scaled to unit
 * norm. Returns the vertex-domain signal and the true spectrum. */
GS_API gs_status gs_generate_blt_signal(const gs_basis* basis, int k, double beta,
                                        uint64_t seed, gs_vector** x, gs_vector** xhat_true);

/* ------------------------------------------------------------------ */
/* Sampling                                                            */

/* m uniform draws with replacement; y = x[node] + Normal(0, sigma^2). */
GS_API gs_status gs_sample_uniform(const gs_vector* x, int m, double sigma, uint64_t seed,
                                   gs_samples** out);

/* m categorical draws from `scores` (as produced by gs_sampling_scores). */
GS_API gs_status gs_sample_scored(const gs_vector* x, const gs_vector* scores, int m,
                                  double sigma, uint64_t seed, gs_samples** out);

GS_API int gs_samples_count(const gs_samples* samples);
GS_API gs_status gs_samples_indices(const gs_samples* samples, int* out);
GS_API gs_status gs_samples_measurements(const gs_samples* samples, double* out);
GS_API gs_status gs_samples_probs(const gs_samples* samples, double* out);

/* CSV with header `index,measurement,prob`. */
GS_API gs_status gs_samples_save_csv(const gs_samples* samples, const char* path);

/* ------------------------------------------------------------------ */
/* Recovery                                                            */

/* Inverse-probability estimate of the first `kappa` frequency components
 * from uniformly drawn samples, reconstructed on the first kappa basis
 * vectors. `xhat_star` (length kappa) may be NULL if not wanted. */
GS_API gs_status gs_recover_random(const gs_basis* basis, const gs_samples* samples, int kappa,
                                   gs_vector** x_star, gs_vector** xhat_star);

/* Same for score-weighted samples; the recorded draw probabilities must
 * match this basis and bandwidth. */
GS_API gs_status gs_recover_designed(const gs_basis* basis, const gs_samples* samples,
                                     int kappa, gs_vector** x_star, gs_vector** xhat_star);

/* Minimum-norm least squares on the first k basis vectors. rank_deficient
 * (may be NULL) reports whether the sampled design matrix lost rank. */
GS_API gs_status gs_recover_least_squares(const gs_basis* basis, const gs_samples* samples,
                                          int k, gs_vector** x_star, gs_vector** xhat_star,
                                          int* rank_deficient);

/* Projection onto the first k basis vectors. */
GS_API gs_status gs_linear_approx(const gs_basis* basis, const gs_vector* x, int k,
                                  gs_vector** out);

/* Squared error ||a - b||^2. */
GS_API gs_status gs_mse(const gs_vector* a, const gs_vector* b, double* out);

/* ------------------------------------------------------------------ */
/* Worst-case bounds and rates                                         */

typedef struct gs_bound_inputs {
  double alpha2;
  double mu;
  double signal_norm_sq;
  double max_coeff_sq;
  double sigma_sq;
  int kappa;
  double beta;
  int m;
  double frob_sq;
  double l21_sq;
  int n;
} gs_bound_inputs;

GS_API gs_status gs_bound_random(const gs_bound_inputs* inputs, double* out);
GS_API gs_status gs_bound_designed(const gs_bound_inputs* inputs, double* out);

/* Rate-optimal bandwidth: round(m^(1/(2 beta + 1))) when use_gamma is 0,
 * round(m^(1/(2 beta + 2 - gamma))) otherwise; clamped to [1, n]. */
GS_API gs_status gs_optimal_kappa(double beta, int m, int n, int use_gamma, double gamma,
                                  int* kappa);

/* Admissible gamma range for the score-concentrated rate. */
GS_API gs_status gs_gamma_interval(double beta, int m, int n, int k, int k0, double* lo,
                                   double* hi);

/* ------------------------------------------------------------------ */
/* Experiment harness                                                  */

typedef enum gs_graph_family {
  GS_GRAPH_RING = 0,
  GS_GRAPH_ERDOS_RENYI = 1,
  GS_GRAPH_STAR = 2
} gs_graph_family;

typedef enum gs_kappa_schedule {
  GS_KAPPA_FIXED = 0,      /* use `kappa` at every sample size */
  GS_KAPPA_RATE_TYPE1 = 1, /* round(m^(1/(2 beta + 1))) */
  GS_KAPPA_RATE_TYPE2 = 2  /* round(m^(1/(2 beta + 2 - gamma))) */
} gs_kappa_schedule;

typedef enum gs_strategy { GS_STRATEGY_RANDOM = 0, GS_STRATEGY_DESIGNED = 1 } gs_strategy;

typedef struct gs_experiment_config {
  gs_graph_family family;
  int n;
  int ring_k;          /* ring only */
  double er_p;         /* Erdos-Renyi only */
  uint64_t graph_seed; /* Erdos-Renyi only */
  int signal_k;
  double signal_beta;
  double sigma_sq;
  gs_kappa_schedule schedule;
  int kappa;    /* GS_KAPPA_FIXED */
  double gamma; /* GS_KAPPA_RATE_TYPE2 */
  const int* sample_sizes;
  int num_sample_sizes;
  int trials;
  uint64_t seed;
} gs_experiment_config;

/* Fills in defaults: ring, n=64, k=4, K=10, beta=1, sigma^2=0.01,
 * fixed kappa=10, 50 trials, seed 1, no sizes. */
GS_API void gs_experiment_config_init(gs_experiment_config* config);

/* Monte Carlo run over all sample sizes and both strategies; fresh signal
 * per trial. Deterministic for a fixed config. */
GS_API gs_status gs_experiment_run(const gs_experiment_config* config, gs_curve** out);

GS_API int gs_curve_num_sizes(const gs_curve* curve);
GS_API gs_status gs_curve_sample_sizes(const gs_curve* curve, int* out);
GS_API gs_status gs_curve_kappas(const gs_curve* curve, int* out);
GS_API gs_status gs_curve_mean(const gs_curve* curve, gs_strategy strategy, double* out);
GS_API gs_status gs_curve_std_err(const gs_curve* curve, gs_strategy strategy, double* out);
GS_API gs_status gs_curve_bound(const gs_curve* curve, gs_strategy strategy, double* out);
GS_API gs_status gs_curve_floor(const gs_curve* curve, double* out);

/* CSV `sample_size,strategy,mean_mse,std_err,floor`. */
GS_API gs_status gs_curve_save_csv(const gs_curve* curve, const char* path);
/* Whitespace columns for plotting. */
GS_API gs_status gs_curve_save_plot(const gs_curve* curve, const char* path);
/* CSV `sample_size,strategy,mean_mse,std_err,bound`. */
GS_API gs_status gs_curve_save_bounds_csv(const gs_curve* curve, const char* path);

/* Log-log slope of one strategy's curve. */
GS_API gs_status gs_curve_fit_rate(const gs_curve* curve, gs_strategy strategy, double* slope,
                                   double* intercept, double* r2);

typedef enum gs_compare_verdict {
  GS_COMPARE_SIMILAR = 0,
  GS_COMPARE_RANDOM_BETTER = 1,
  GS_COMPARE_DESIGNED_BETTER = 2
} gs_compare_verdict;

/* Per-size random/designed mean ratios (buffer may be NULL) and a
 * two-sigma verdict. */
GS_API gs_status gs_curve_compare(const gs_curve* curve, gs_compare_verdict* verdict,
                                  double* ratios);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GRAPHSAMPLE_H */
