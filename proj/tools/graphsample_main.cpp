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

// Command-line front end. Everything goes through the public C interface in
// graphsample.h; this file never touches the library internals.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphsample.h"

namespace {

[[noreturn]] void die(const std::string& context, gs_status status) {
  std::fprintf(stderr, "graphsample: %s: %s (%s)\n", context.c_str(), gs_last_error(),
               gs_status_name(status));
  std::exit(1);
}

void check(gs_status status, const std::string& context) {
  if (status != GS_OK) die(context, status);
}

struct GraphDeleter {
  void operator()(gs_graph* g) const { gs_graph_free(g); }
};
struct BasisDeleter {
  void operator()(gs_basis* b) const { gs_basis_free(b); }
};
struct VectorDeleter {
  void operator()(gs_vector* v) const { gs_vector_free(v); }
};
struct SamplesDeleter {
  void operator()(gs_samples* s) const { gs_samples_free(s); }
};
struct CurveDeleter {
  void operator()(gs_curve* c) const { gs_curve_free(c); }
};
using GraphPtr = std::unique_ptr<gs_graph, GraphDeleter>;
using BasisPtr = std::unique_ptr<gs_basis, BasisDeleter>;
using VectorPtr = std::unique_ptr<gs_vector, VectorDeleter>;
using SamplesPtr = std::unique_ptr<gs_samples, SamplesDeleter>;
using CurvePtr = std::unique_ptr<gs_curve, CurveDeleter>;

// Output paths honor GRAPHSAMPLE_OUT_DIR; inputs are used as given.
std::string resolve_output(const std::string& path) {
  const char* dir = std::getenv("GRAPHSAMPLE_OUT_DIR");
  if (!dir || !*dir || path.empty() || path.front() == '/') return path;
  std::string resolved(dir);
  if (resolved.back() != '/') resolved += '/';
  return resolved + path;
}

struct GraphArgs {
  std::string family = "ring";
  int n = 64;
  int ring_k = 4;
  double er_p = 0.2;
  std::uint64_t seed = 1;
  std::string file;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("--graph", args.family, "graph family: ring, er, star")
      ->check(CLI::IsMember({"ring", "er", "star"}))
      ->capture_default_str();
  cmd->add_option("--n", args.n, "node count")->capture_default_str();
  cmd->add_option("--k", args.ring_k, "ring neighbor count (even)")->capture_default_str();
  cmd->add_option("--p", args.er_p, "er edge probability")->capture_default_str();
  cmd->add_option("--graph-seed", args.seed, "er generator seed")->capture_default_str();
  cmd->add_option("--graph-file", args.file, "edge-list file (overrides --graph)");
}

GraphPtr build_normalized_graph(const GraphArgs& args) {
  gs_graph* raw = nullptr;
  if (!args.file.empty()) {
    check(gs_graph_load(args.file.c_str(), &raw), "loading " + args.file);
  } else if (args.family == "ring") {
    check(gs_graph_build_ring(args.n, args.ring_k, &raw), "building ring graph");
  } else if (args.family == "er") {
    check(gs_graph_build_erdos_renyi(args.n, args.er_p, args.seed, &raw),
          "building er graph");
  } else {
    check(gs_graph_build_star(args.n, &raw), "building star graph");
  }
  GraphPtr graph(raw);
  if (gs_graph_is_normalized(graph.get())) return graph;
  gs_graph* normalized = nullptr;
  check(gs_graph_normalize(graph.get(), &normalized), "normalizing graph");
  return GraphPtr(normalized);
}

BasisPtr compute_basis(const GraphPtr& graph) {
  gs_basis* basis = nullptr;
  check(gs_basis_compute(graph.get(), &basis), "computing spectral basis");
  return BasisPtr(basis);
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    sizes.push_back(std::stoi(token));
  }
  return sizes;
}

// Key-value config file: `key = value` or `key value`, # comments.
std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "graphsample: cannot open config '%s'\n", path.c_str());
    std::exit(1);
  }
  std::map<std::string, std::string> values;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string key, value;
    std::istringstream fields(line);
    if (!(fields >> key)) continue;
    std::string eq;
    if (!(fields >> eq)) continue;
    if (eq == "=") {
      if (!(fields >> value)) continue;
    } else {
      value = eq;
    }
    values[key] = value;
  }
  return values;
}

struct ExperimentArgs {
  GraphArgs graph;
  int signal_k = 10;
  double beta = 1.0;
  double sigma_sq = 0.01;
  int kappa = 10;
  std::string schedule = "fixed";
  double gamma = 1.0;
  std::string sizes_csv = "25,50,100,200,400,800,1600,3200,6400";
  int trials = 50;
  std::uint64_t seed = 1;
  std::string out = "curve.csv";
  std::string plot_out;
  std::string config_file;
};

void add_experiment_options(CLI::App* cmd, ExperimentArgs& args) {
  add_graph_options(cmd, args.graph);
  cmd->add_option("--K", args.signal_k, "signal bandwidth K")->capture_default_str();
  cmd->add_option("--beta", args.beta, "tail decay exponent")->capture_default_str();
  cmd->add_option("--sigma2", args.sigma_sq, "noise variance")->capture_default_str();
  cmd->add_option("--kappa", args.kappa, "recovery bandwidth (fixed schedule)")
      ->capture_default_str();
  cmd->add_option("--schedule", args.schedule, "bandwidth schedule: fixed, type1, type2")
      ->check(CLI::IsMember({"fixed", "type1", "type2"}))
      ->capture_default_str();
  cmd->add_option("--gamma", args.gamma, "type2 schedule gamma")->capture_default_str();
  cmd->add_option("--sizes", args.sizes_csv, "comma-separated sample sizes")
      ->capture_default_str();
  cmd->add_option("--trials", args.trials, "Monte Carlo trials")->capture_default_str();
  cmd->add_option("--seed", args.seed, "experiment seed")->capture_default_str();
  cmd->add_option("--out", args.out, "output CSV path")->capture_default_str();
  cmd->add_option("--plot-out", args.plot_out, "optional plot-data path");
  cmd->add_option("--config", args.config_file, "key-value config file");
}

// Config file entries fill in everything the command line left untouched.
void apply_config_file(CLI::App* cmd, ExperimentArgs& args) {
  if (args.config_file.empty()) return;
  const auto values = parse_config_file(args.config_file);
  auto absorb = [&](const char* flag, const char* key, auto& slot) {
    const auto it = values.find(key);
    if (it == values.end()) return;
    if (cmd->count(flag) > 0) return;  // explicit flags win
    std::istringstream stream(it->second);
    stream >> slot;
  };
  absorb("--graph", "graph", args.graph.family);
  absorb("--n", "n", args.graph.n);
  absorb("--k", "k", args.graph.ring_k);
  absorb("--p", "p", args.graph.er_p);
  absorb("--graph-seed", "graph_seed", args.graph.seed);
  absorb("--K", "K", args.signal_k);
  absorb("--beta", "beta", args.beta);
  absorb("--sigma2", "sigma2", args.sigma_sq);
  absorb("--kappa", "kappa", args.kappa);
  absorb("--schedule", "schedule", args.schedule);
  absorb("--gamma", "gamma", args.gamma);
  absorb("--sizes", "sizes", args.sizes_csv);
  absorb("--trials", "trials", args.trials);
  absorb("--seed", "seed", args.seed);
  absorb("--out", "out", args.out);
}

CurvePtr run_harness(CLI::App* cmd, ExperimentArgs& args) {
  apply_config_file(cmd, args);
  gs_experiment_config config;
  gs_experiment_config_init(&config);
  if (!args.graph.file.empty()) {
    std::fprintf(stderr,
                 "graphsample: the experiment harness builds graphs by family; "
                 "--graph-file is not supported here\n");
    std::exit(1);
  }
  config.family = args.graph.family == "er"     ? GS_GRAPH_ERDOS_RENYI
                  : args.graph.family == "star" ? GS_GRAPH_STAR
                                                : GS_GRAPH_RING;
  config.n = args.graph.n;
  config.ring_k = args.graph.ring_k;
  config.er_p = args.graph.er_p;
  config.graph_seed = args.graph.seed;
  config.signal_k = args.signal_k;
  config.signal_beta = args.beta;
  config.sigma_sq = args.sigma_sq;
  config.schedule = args.schedule == "type1"   ? GS_KAPPA_RATE_TYPE1
                    : args.schedule == "type2" ? GS_KAPPA_RATE_TYPE2
                                               : GS_KAPPA_FIXED;
  config.kappa = args.kappa;
  config.gamma = args.gamma;
  const std::vector<int> sizes = parse_sizes(args.sizes_csv);
  config.sample_sizes = sizes.data();
  config.num_sample_sizes = static_cast<int>(sizes.size());
  config.trials = args.trials;
  config.seed = args.seed;

  gs_curve* curve = nullptr;
  check(gs_experiment_run(&config, &curve), "running experiment");
  return CurvePtr(curve);
}

VectorPtr obtain_signal(const BasisPtr& basis, const std::string& signal_file, int signal_k,
                        double beta, std::uint64_t signal_seed) {
  gs_vector* x = nullptr;
  if (!signal_file.empty()) {
    check(gs_vector_load(signal_file.c_str(), &x), "loading signal " + signal_file);
  } else {
    check(gs_generate_blt_signal(basis.get(), signal_k, beta, signal_seed, &x, nullptr),
          "generating signal");
  }
  return VectorPtr(x);
}

struct SpectrumArgs {
  GraphArgs graph;
  std::string out = "basis.txt";
  double type1_c = 3.0;
  int k0 = 10;
  double alpha = 1.0;
};

int run_spectrum(CLI::App* cmd) {
  auto args = std::make_shared<SpectrumArgs>();
  add_graph_options(cmd, args->graph);
  cmd->add_option("--out", args->out, "basis export path")->capture_default_str();
  cmd->add_option("--type1-c", args->type1_c, "flatness threshold")->capture_default_str();
  cmd->add_option("--K0", args->k0, "concentration cutoff")->capture_default_str();
  cmd->add_option("--alpha", args->alpha, "concentration tolerance")->capture_default_str();

  cmd->callback([args]() {
    const GraphPtr graph = build_normalized_graph(args->graph);
    const BasisPtr basis = compute_basis(graph);
    const int n = gs_basis_size(basis.get());

    std::vector<double> eigenvalues(static_cast<std::size_t>(n));
    check(gs_basis_eigenvalues(basis.get(), eigenvalues.data()), "reading eigenvalues");
    double alpha1 = 0.0, alpha2 = 0.0;
    check(gs_basis_riesz_constants(basis.get(), &alpha1, &alpha2), "reading frame bounds");

    int is_type1 = 0, is_type2 = 0;
    double max_scaled = 0.0, ratio = 0.0;
    check(gs_classify_type1(basis.get(), args->type1_c, &is_type1, &max_scaled), "type-1 test");
    const int cutoff = args->k0 > n ? n : args->k0;
    check(gs_classify_type2(basis.get(), cutoff, args->alpha, 0, &is_type2, &ratio),
          "type-2 test");

    const std::string path = resolve_output(args->out);
    check(gs_basis_save(basis.get(), path.c_str()), "writing " + path);

    std::printf("nodes:            %d\n", n);
    std::printf("eigenvalue range: [%.9f, %.9f]\n", eigenvalues.back(), eigenvalues.front());
    std::printf("frame bounds:     alpha1=%.9f alpha2=%.9f\n", alpha1, alpha2);
    std::printf("type-1 (flat):    %s (max |entry| * sqrt(n) = %.4f, threshold %.2f)\n",
                is_type1 ? "yes" : "no", max_scaled, args->type1_c);
    std::printf("type-2 at K0=%-3d: %s (off/on score ratio = %.4f, tolerance %.2f)\n", cutoff,
                is_type2 ? "yes" : "no", ratio, args->alpha);
    std::printf("basis written to %s\n", path.c_str());
  });
  return 0;
}

struct GenSignalArgs {
  GraphArgs graph;
  int signal_k = 10;
  double beta = 1.0;
  std::uint64_t seed = 1;
  std::string out = "signal.txt";
  std::string spectrum_out;
};

int run_gen_signal(CLI::App* cmd) {
  auto args = std::make_shared<GenSignalArgs>();
  add_graph_options(cmd, args->graph);
  cmd->add_option("--K", args->signal_k, "signal bandwidth")->capture_default_str();
  cmd->add_option("--beta", args->beta, "tail decay exponent")->capture_default_str();
  cmd->add_option("--seed", args->seed, "generator seed")->capture_default_str();
  cmd->add_option("--out", args->out, "signal output path")->capture_default_str();
  cmd->add_option("--spectrum-out", args->spectrum_out, "optional true-spectrum output path");

  cmd->callback([args]() {
    const GraphPtr graph = build_normalized_graph(args->graph);
    const BasisPtr basis = compute_basis(graph);
    gs_vector* x = nullptr;
    gs_vector* xhat = nullptr;
    check(gs_generate_blt_signal(basis.get(), args->signal_k, args->beta, args->seed, &x, &xhat),
          "generating signal");
    const VectorPtr signal(x), spectrum(xhat);

    const std::string path = resolve_output(args->out);
    check(gs_vector_save(signal.get(), path.c_str()), "writing " + path);
    if (!args->spectrum_out.empty()) {
      const std::string spath = resolve_output(args->spectrum_out);
      check(gs_vector_save(spectrum.get(), spath.c_str()), "writing " + spath);
    }

    double eta = 0.0, mu = 0.0;
    check(gs_global_smoothness(graph.get(), signal.get(), &eta), "measuring smoothness");
    check(gs_blt_residual(basis.get(), signal.get(), args->signal_k, args->beta, &mu),
          "measuring tail residual");
    std::printf("signal written to %s\n", path.c_str());
    std::printf("smoothness eta_min = %.6g, tail residual mu_min = %.6g\n", eta, mu);
  });
  return 0;
}

struct SampleArgs {
  GraphArgs graph;
  std::string signal_file;
  int signal_k = 10;
  double beta = 1.0;
  std::uint64_t signal_seed = 1;
  std::string strategy = "uniform";
  int kappa = 10;
  int m = 100;
  double sigma_sq = 0.01;
  std::uint64_t seed = 1;
  std::string out = "samples.csv";
};

void add_sampling_options(CLI::App* cmd, SampleArgs& args,
                          const std::string& strategy_help,
                          const std::vector<std::string>& strategies) {
  add_graph_options(cmd, args.graph);
  cmd->add_option("--signal", args.signal_file, "signal file (generated when omitted)");
  cmd->add_option("--K", args.signal_k, "generated-signal bandwidth")->capture_default_str();
  cmd->add_option("--beta", args.beta, "generated-signal tail exponent")->capture_default_str();
  cmd->add_option("--signal-seed", args.signal_seed, "generated-signal seed")
      ->capture_default_str();
  cmd->add_option("--strategy", args.strategy, strategy_help)
      ->check(CLI::IsMember(strategies))
      ->capture_default_str();
  cmd->add_option("--kappa", args.kappa, "bandwidth")->capture_default_str();
  cmd->add_option("--m", args.m, "number of draws")->capture_default_str();
  cmd->add_option("--sigma2", args.sigma_sq, "noise variance")->capture_default_str();
  cmd->add_option("--seed", args.seed, "sampling seed")->capture_default_str();
  cmd->add_option("--out", args.out, "output path")->capture_default_str();
}

SamplesPtr draw_samples(const SampleArgs& args, const BasisPtr& basis, const VectorPtr& x) {
  const double sigma = std::sqrt(args.sigma_sq);
  gs_samples* raw = nullptr;
  if (args.strategy == "scored") {
    gs_vector* scores = nullptr;
    check(gs_sampling_scores(basis.get(), args.kappa, &scores), "computing scores");
    const VectorPtr scores_ptr(scores);
    check(gs_sample_scored(x.get(), scores_ptr.get(), args.m, sigma, args.seed, &raw),
          "sampling");
  } else {
    check(gs_sample_uniform(x.get(), args.m, sigma, args.seed, &raw), "sampling");
  }
  return SamplesPtr(raw);
}

int run_sample(CLI::App* cmd) {
  auto args = std::make_shared<SampleArgs>();
  add_sampling_options(cmd, *args, "uniform or scored", {"uniform", "scored"});

  cmd->callback([args]() {
    const GraphPtr graph = build_normalized_graph(args->graph);
    const BasisPtr basis = compute_basis(graph);
    const VectorPtr x =
        obtain_signal(basis, args->signal_file, args->signal_k, args->beta, args->signal_seed);
    const SamplesPtr samples = draw_samples(*args, basis, x);
    const std::string path = resolve_output(args->out);
    check(gs_samples_save_csv(samples.get(), path.c_str()), "writing " + path);
    std::printf("%d %s draws written to %s\n", gs_samples_count(samples.get()),
                args->strategy.c_str(), path.c_str());
  });
  return 0;
}

int run_recover(CLI::App* cmd) {
  auto args = std::make_shared<SampleArgs>();
  args->out = "recovery.csv";
  add_sampling_options(cmd, *args, "uniform, scored, or least-squares",
                       {"uniform", "scored", "least-squares"});

  cmd->callback([args]() {
    const GraphPtr graph = build_normalized_graph(args->graph);
    const BasisPtr basis = compute_basis(graph);
    const VectorPtr x =
        obtain_signal(basis, args->signal_file, args->signal_k, args->beta, args->signal_seed);
    const SamplesPtr samples = draw_samples(*args, basis, x);

    gs_vector* x_star = nullptr;
    gs_vector* xhat_star = nullptr;
    int rank_deficient = 0;
    if (args->strategy == "uniform") {
      check(gs_recover_random(basis.get(), samples.get(), args->kappa, &x_star, &xhat_star),
            "recovering");
    } else if (args->strategy == "scored") {
      check(gs_recover_designed(basis.get(), samples.get(), args->kappa, &x_star, &xhat_star),
            "recovering");
    } else {
      check(gs_recover_least_squares(basis.get(), samples.get(), args->kappa, &x_star,
                                     &xhat_star, &rank_deficient),
            "recovering");
    }
    const VectorPtr x_star_ptr(x_star), xhat_star_ptr(xhat_star);

    const int n = gs_vector_size(x_star_ptr.get());
    std::vector<double> values(static_cast<std::size_t>(n));
    std::vector<double> spectrum(static_cast<std::size_t>(n), 0.0);
    check(gs_vector_copy_data(x_star_ptr.get(), values.data()), "reading recovery");
    std::vector<double> head(static_cast<std::size_t>(gs_vector_size(xhat_star_ptr.get())));
    check(gs_vector_copy_data(xhat_star_ptr.get(), head.data()), "reading spectrum");
    std::copy(head.begin(), head.end(), spectrum.begin());

    const std::string path = resolve_output(args->out);
    std::ofstream csv(path);
    if (!csv) die("writing " + path, GS_ERROR_IO);
    csv << "index,x_star,xhat_star\n";
    for (int i = 0; i < n; ++i) {
      char line[96];
      std::snprintf(line, sizeof(line), "%d,%.17g,%.17g\n", i,
                    values[static_cast<std::size_t>(i)], spectrum[static_cast<std::size_t>(i)]);
      csv << line;
    }

    double error = 0.0;
    check(gs_mse(x.get(), x_star_ptr.get(), &error), "measuring error");
    std::printf("recovery written to %s\n", path.c_str());
    std::printf("squared error vs the true signal: %.6g\n", error);
    if (args->strategy == "least-squares" && rank_deficient)
      std::printf("warning: sampled design matrix was rank deficient\n");
  });
  return 0;
}

int run_experiment_cmd(CLI::App* cmd) {
  auto args = std::make_shared<ExperimentArgs>();
  add_experiment_options(cmd, *args);
  cmd->callback([cmd, args]() {
    const CurvePtr curve = run_harness(cmd, *args);
    const std::string path = resolve_output(args->out);
    check(gs_curve_save_csv(curve.get(), path.c_str()), "writing " + path);
    if (!args->plot_out.empty()) {
      const std::string plot_path = resolve_output(args->plot_out);
      check(gs_curve_save_plot(curve.get(), plot_path.c_str()), "writing " + plot_path);
    }

    gs_compare_verdict verdict;
    check(gs_curve_compare(curve.get(), &verdict, nullptr), "comparing strategies");
    const char* verdict_name = verdict == GS_COMPARE_SIMILAR         ? "similar"
                               : verdict == GS_COMPARE_RANDOM_BETTER ? "uniform-better"
                                                                     : "designed-better";
    double floor = 0.0;
    check(gs_curve_floor(curve.get(), &floor), "reading floor");
    std::printf("curve written to %s\n", path.c_str());
    std::printf("projection floor: %.6g\n", floor);
    std::printf("strategy verdict at two sigma: %s\n", verdict_name);
  });
  return 0;
}

int run_bounds(CLI::App* cmd) {
  auto args = std::make_shared<ExperimentArgs>();
  args->out = "bounds.csv";
  add_experiment_options(cmd, *args);
  cmd->callback([cmd, args]() {
    const CurvePtr curve = run_harness(cmd, *args);
    const std::string path = resolve_output(args->out);
    check(gs_curve_save_bounds_csv(curve.get(), path.c_str()), "writing " + path);

    const int num_sizes = gs_curve_num_sizes(curve.get());
    std::vector<double> mean(static_cast<std::size_t>(num_sizes));
    std::vector<double> bound(static_cast<std::size_t>(num_sizes));
    int covered = 0;
    for (gs_strategy strategy : {GS_STRATEGY_RANDOM, GS_STRATEGY_DESIGNED}) {
      check(gs_curve_mean(curve.get(), strategy, mean.data()), "reading means");
      check(gs_curve_bound(curve.get(), strategy, bound.data()), "reading bounds");
      for (int s = 0; s < num_sizes; ++s)
        if (mean[static_cast<std::size_t>(s)] <= bound[static_cast<std::size_t>(s)]) ++covered;
    }
    std::printf("bound report written to %s\n", path.c_str());
    std::printf("empirical mean within the bound in %d of %d cells\n", covered, 2 * num_sizes);
  });
  return 0;
}

int run_rates(CLI::App* cmd) {
  auto args = std::make_shared<ExperimentArgs>();
  args->schedule = "type1";
  args->sizes_csv = "1000,2000,4000,8000,16000,32000";
  args->graph.n = 1024;
  args->out = "rate_curve.csv";
  add_experiment_options(cmd, *args);
  cmd->callback([cmd, args]() {
    const CurvePtr curve = run_harness(cmd, *args);
    const std::string path = resolve_output(args->out);
    check(gs_curve_save_csv(curve.get(), path.c_str()), "writing " + path);

    const double target = -2.0 * args->beta / (2.0 * args->beta + 1.0);
    std::printf("curve written to %s\n", path.c_str());
    std::printf("flat-transform target slope: %.4f\n", target);
    for (gs_strategy strategy : {GS_STRATEGY_RANDOM, GS_STRATEGY_DESIGNED}) {
      double slope = 0.0, intercept = 0.0, r2 = 0.0;
      check(gs_curve_fit_rate(curve.get(), strategy, &slope, &intercept, &r2), "fitting rate");
      std::printf("%s: slope %.4f, intercept %.4f, r2 %.4f\n",
                  strategy == GS_STRATEGY_RANDOM ? "uniform " : "designed", slope, intercept,
                  r2);
    }

    // score-concentrated schedules: report the admissible gamma range at the
    // largest sample size and the exponent range it implies
    const std::vector<int> sizes = parse_sizes(args->sizes_csv);
    if (!sizes.empty()) {
      const int m = sizes.back();
      double lo = 0.0, hi = 0.0;
      check(gs_gamma_interval(args->beta, m, args->graph.n, args->signal_k, args->signal_k,
                              &lo, &hi),
            "evaluating gamma interval");
      const double exp_lo = -2.0 * args->beta / (2.0 * args->beta + 2.0 - lo);
      const double exp_hi = -2.0 * args->beta / (2.0 * args->beta + 2.0 - hi);
      std::printf("admissible gamma at m=%d: [%.4f, %.4f] -> exponent range [%.4f, %.4f]\n", m,
                  lo, hi, exp_lo, exp_hi);
      if (args->schedule == "type2" && (args->gamma < lo || args->gamma > hi))
        std::printf("warning: gamma %.4f lies outside [%.4f, %.4f]; evaluated anyway\n",
                    args->gamma, lo, hi);
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-signal sampling and recovery toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gs_version()));

  run_spectrum(app.add_subcommand("spectrum", "eigendecomposition, frame bounds, classifiers"));
  run_gen_signal(app.add_subcommand("gen-signal", "generate an approximately bandlimited signal"));
  run_sample(app.add_subcommand("sample", "draw noisy node measurements"));
  run_recover(app.add_subcommand("recover", "sample and recover a signal"));
  run_experiment_cmd(app.add_subcommand("experiment", "Monte Carlo MSE curves for both strategies"));
  run_bounds(app.add_subcommand("bounds", "empirical MSE next to the worst-case bounds"));
  run_rates(app.add_subcommand("rates", "fit the MSE convergence rate on a bandwidth schedule"));

  CLI11_PARSE(app, argc, argv);
  return 0;
}
