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

#include "core/experiment.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/recovery.hpp"
#include "core/rng.hpp"
#include "core/signal_model.hpp"
#include "core/textio.hpp"

namespace gsp {

namespace {

// Stream tags so the signal, the uniform draws, and the scored draws never
// share a derived seed.
constexpr std::uint64_t kTagSignal = 0x5349474e;
constexpr std::uint64_t kTagUniform = 0x554e4946;
constexpr std::uint64_t kTagScored = 0x53434f52;

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  double bound_sum = 0.0;
  int count = 0;

  void add(double value, double bound) {
    sum += value;
    sum_sq += value * value;
    bound_sum += bound;
    ++count;
  }
  double mean() const { return sum / count; }
  double std_err() const {
    if (count < 2) return 0.0;
    const double var = (sum_sq - sum * sum / count) / (count - 1);
    return std::sqrt(std::max(var, 0.0) / count);
  }
  double mean_bound() const { return bound_sum / count; }
};

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw std::invalid_argument("experiment needs at least 1 trial");
  if (config.sample_sizes.empty())
    throw std::invalid_argument("experiment needs at least one sample size");
  for (std::size_t i = 0; i + 1 < config.sample_sizes.size(); ++i)
    if (config.sample_sizes[i] >= config.sample_sizes[i + 1])
      throw std::invalid_argument("sample sizes must be strictly increasing");
  if (config.sample_sizes.front() < 1)
    throw std::invalid_argument("sample sizes must be positive");
  if (config.sigma_sq < 0.0) throw std::invalid_argument("noise variance must be nonnegative");
  if (config.kappa.kind == KappaSchedule::Kind::kFixed &&
      (config.kappa.kappa < 1 || config.kappa.kappa > config.graph.n))
    throw std::invalid_argument("fixed bandwidth out of range for this graph");
  if (config.signal_k < 1 || config.signal_k > config.graph.n)
    throw std::invalid_argument("signal bandwidth out of range for this graph");
}

int schedule_kappa(const KappaSchedule& schedule, double beta, int m, int n) {
  switch (schedule.kind) {
    case KappaSchedule::Kind::kFixed:
      return schedule.kappa;
    case KappaSchedule::Kind::kRateType1:
      return optimal_kappa(beta, m, n, RateSpec{RateSpec::Kind::kType1, 1.0});
    case KappaSchedule::Kind::kRateType2:
      return optimal_kappa(beta, m, n, RateSpec{RateSpec::Kind::kType2, schedule.gamma});
  }
  throw std::logic_error("unreachable");
}

}  // namespace

GraphShift build_graph(const GraphSpec& spec) {
  switch (spec.family) {
    case GraphSpec::Family::kRing:
      return normalize_shift(build_ring_knn(spec.n, spec.ring_k));
    case GraphSpec::Family::kErdosRenyi:
      return normalize_shift(build_erdos_renyi(spec.n, spec.er_p, spec.er_seed));
    case GraphSpec::Family::kStar:
      return normalize_shift(build_star(spec.n));
  }
  throw std::logic_error("unreachable");
}

MseCurve run_experiment(const ExperimentConfig& config) {
  validate(config);
  const GraphShift shift = build_graph(config.graph);
  const SpectralBasis basis = decompose(shift);
  const int n = basis.n;
  const double sigma = std::sqrt(config.sigma_sq);
  const auto num_sizes = config.sample_sizes.size();

  MseCurve curve;
  curve.sample_sizes = config.sample_sizes;
  curve.kappas.resize(num_sizes);

  std::vector<Accumulator> acc_random(num_sizes), acc_designed(num_sizes);
  std::map<int, SamplingScores> scores_cache;
  std::map<int, NormFunctionals> norms_cache;
  for (std::size_t s = 0; s < num_sizes; ++s) {
    const int kappa =
        schedule_kappa(config.kappa, config.signal_beta, config.sample_sizes[s], n);
    curve.kappas[s] = kappa;
    if (!scores_cache.count(kappa)) {
      scores_cache.emplace(kappa, sampling_scores(basis, kappa));
      norms_cache.emplace(kappa, norm_functionals(basis, kappa));
    }
  }

  double floor_sum = 0.0;
  for (int trial = 0; trial < config.trials; ++trial) {
    const BltSignal signal = generate_blt_signal(
        basis, config.signal_k, config.signal_beta,
        rng::derive_seed(config.seed, kTagSignal, static_cast<std::uint64_t>(trial)));
    const GraphSignal& x = signal.x;
    floor_sum += mse(x, linear_approx(basis, x, config.signal_k));

    BoundInputs inputs;
    inputs.alpha2 = basis.alpha2;
    inputs.signal_norm_sq = x.squaredNorm();
    inputs.max_coeff_sq = x.cwiseAbs2().maxCoeff();
    inputs.sigma_sq = config.sigma_sq;
    inputs.beta = config.signal_beta;
    inputs.n = n;

    for (std::size_t s = 0; s < num_sizes; ++s) {
      const int m = config.sample_sizes[s];
      const int kappa = curve.kappas[s];
      const auto& scores = scores_cache.at(kappa);
      const auto& norms = norms_cache.at(kappa);

      inputs.kappa = kappa;
      inputs.m = m;
      // The measured tail bound at this bandwidth keeps the bound applicable
      // for every kappa in the schedule.
      inputs.mu = blt_residual_spectrum(signal.xhat_true, kappa, config.signal_beta);
      inputs.frob_sq = norms.frob_sq;
      inputs.l21_sq = norms.l21_sq;

      {
        const SampleSet samples = sample_uniform(
            x, m, sigma,
            rng::derive_seed(config.seed, kTagUniform, static_cast<std::uint64_t>(trial),
                             static_cast<std::uint64_t>(s)));
        const RecoveryResult rec = recover_random(basis, samples, kappa);
        acc_random[s].add(mse(x, rec.x_star), bound_random(inputs));
      }
      {
        const SampleSet samples = sample_scored(
            x, scores, m, sigma,
            rng::derive_seed(config.seed, kTagScored, static_cast<std::uint64_t>(trial),
                             static_cast<std::uint64_t>(s)));
        const RecoveryResult rec = recover_designed(basis, samples, kappa);
        acc_designed[s].add(mse(x, rec.x_star), bound_designed(inputs));
      }
    }
  }

  curve.floor = floor_sum / config.trials;
  auto collect = [&](const std::vector<Accumulator>& acc, MseSeries& series) {
    series.mean.resize(num_sizes);
    series.std_err.resize(num_sizes);
    series.mean_bound.resize(num_sizes);
    for (std::size_t s = 0; s < num_sizes; ++s) {
      series.mean[s] = acc[s].mean();
      series.std_err[s] = acc[s].std_err();
      series.mean_bound[s] = acc[s].mean_bound();
    }
  };
  collect(acc_random, curve.random);
  collect(acc_designed, curve.designed);
  return curve;
}

void emit_csv(const MseCurve& curve, const std::string& path) {
  auto out = textio::open_output(path);
  out << "sample_size,strategy,mean_mse,std_err,floor\n";
  for (std::size_t s = 0; s < curve.sample_sizes.size(); ++s) {
    out << curve.sample_sizes[s] << ",random," << textio::format_double(curve.random.mean[s])
        << ',' << textio::format_double(curve.random.std_err[s]) << ','
        << textio::format_double(curve.floor) << "\n";
    out << curve.sample_sizes[s] << ",designed,"
        << textio::format_double(curve.designed.mean[s]) << ','
        << textio::format_double(curve.designed.std_err[s]) << ','
        << textio::format_double(curve.floor) << "\n";
  }
  textio::finish_output(out, path);
}

MseCurve load_curve_csv(const std::string& path) {
  auto in = textio::open_input(path);
  std::string line;
  if (!std::getline(in, line) || line != "sample_size,strategy,mean_mse,std_err,floor")
    throw ParseError("line 1: expected header 'sample_size,strategy,mean_mse,std_err,floor'");
  MseCurve curve;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream iss(line);
    std::string size_tok, strategy, mean_tok, se_tok, floor_tok;
    if (!std::getline(iss, size_tok, ',') || !std::getline(iss, strategy, ',') ||
        !std::getline(iss, mean_tok, ',') || !std::getline(iss, se_tok, ',') ||
        !std::getline(iss, floor_tok))
      throw ParseError("line " + std::to_string(line_no) + ": expected five fields");
    int size = 0;
    double mean = 0.0, se = 0.0, floor = 0.0;
    try {
      size = std::stoi(size_tok);
      mean = std::stod(mean_tok);
      se = std::stod(se_tok);
      floor = std::stod(floor_tok);
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line_no) + ": malformed number");
    }
    MseSeries* series = nullptr;
    if (strategy == "random")
      series = &curve.random;
    else if (strategy == "designed")
      series = &curve.designed;
    else
      throw ParseError("line " + std::to_string(line_no) + ": unknown strategy '" + strategy +
                       "'");
    if (series == &curve.random) curve.sample_sizes.push_back(size);
    series->mean.push_back(mean);
    series->std_err.push_back(se);
    curve.floor = floor;
  }
  if (curve.random.mean.size() != curve.designed.mean.size())
    throw ParseError("curve file has unbalanced strategy rows");
  return curve;
}

void emit_plot_data(const MseCurve& curve, const std::string& path) {
  auto out = textio::open_output(path);
  out << "# sample_size random_mean random_stderr designed_mean designed_stderr floor\n";
  for (std::size_t s = 0; s < curve.sample_sizes.size(); ++s) {
    out << curve.sample_sizes[s] << ' ' << textio::format_double(curve.random.mean[s]) << ' '
        << textio::format_double(curve.random.std_err[s]) << ' '
        << textio::format_double(curve.designed.mean[s]) << ' '
        << textio::format_double(curve.designed.std_err[s]) << ' '
        << textio::format_double(curve.floor) << "\n";
  }
  textio::finish_output(out, path);
}

void emit_bounds_csv(const MseCurve& curve, const std::string& path) {
  auto out = textio::open_output(path);
  out << "sample_size,strategy,mean_mse,std_err,bound\n";
  for (std::size_t s = 0; s < curve.sample_sizes.size(); ++s) {
    out << curve.sample_sizes[s] << ",random," << textio::format_double(curve.random.mean[s])
        << ',' << textio::format_double(curve.random.std_err[s]) << ','
        << textio::format_double(curve.random.mean_bound[s]) << "\n";
    out << curve.sample_sizes[s] << ",designed,"
        << textio::format_double(curve.designed.mean[s]) << ','
        << textio::format_double(curve.designed.std_err[s]) << ','
        << textio::format_double(curve.designed.mean_bound[s]) << "\n";
  }
  textio::finish_output(out, path);
}

StrategyCurve strategy_curve(const MseCurve& curve, bool designed) {
  const MseSeries& series = designed ? curve.designed : curve.random;
  return StrategyCurve{curve.sample_sizes, series.mean, series.std_err};
}

CompareReport compare_strategies(const StrategyCurve& a, const StrategyCurve& b) {
  if (a.sample_sizes != b.sample_sizes)
    throw std::invalid_argument("strategy curves use different sample-size grids");
  CompareReport report;
  int a_wins = 0, b_wins = 0;
  for (std::size_t s = 0; s < a.sample_sizes.size(); ++s) {
    report.ratios.push_back(a.mean[s] / b.mean[s]);
    const double pooled =
        std::sqrt(a.std_err[s] * a.std_err[s] + b.std_err[s] * b.std_err[s]);
    const double z = pooled > 0.0 ? (a.mean[s] - b.mean[s]) / pooled : 0.0;
    report.z_scores.push_back(z);
    if (z <= -2.0) ++a_wins;
    if (z >= 2.0) ++b_wins;
  }
  if (a_wins > b_wins)
    report.verdict = CompareReport::Verdict::kABetter;
  else if (b_wins > a_wins)
    report.verdict = CompareReport::Verdict::kBBetter;
  else
    report.verdict = CompareReport::Verdict::kSimilar;
  return report;
}

}  // namespace gsp
