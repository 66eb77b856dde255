#include "stoprule/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "stoprule/analytics.hpp"

namespace stoprule {

long long run_episode(const RuleSpec& spec, const Environment& env,
                      std::uint64_t stream_seed) {
  BernoulliStream stream(stream_seed, env);
  return run_episode_from(spec, [&stream] { return stream.next(); });
}

double err_percent(double theoretical, double empirical) {
  if (empirical == 0.0) {
    throw std::domain_error("err_percent: empirical value is zero");
  }
  return std::abs(theoretical - empirical) / std::abs(empirical) * 100.0;
}

SimulationSummary run_experiment(const ExperimentConfig& config) {
  if (config.episodes < 1) {
    throw std::invalid_argument("run_experiment: episodes must be >= 1");
  }

  std::uint64_t sum = 0;
  unsigned __int128 sum_sq = 0;
  for (long long i = 0; i < config.episodes; ++i) {
    long long t;
    try {
      t = run_episode(config.spec, config.env,
                      episode_seed(config.master_seed, static_cast<std::uint64_t>(i)));
    } catch (const std::runtime_error&) {
      throw std::runtime_error("run_experiment: runaway episode at index " +
                               std::to_string(i));
    }
    sum += static_cast<std::uint64_t>(t);
    sum_sq += static_cast<unsigned __int128>(t) * static_cast<unsigned __int128>(t);
  }

  const double n = static_cast<double>(config.episodes);
  const double mean = static_cast<double>(sum) / n;
  // Population std (divide by N); pinned for reproducibility.
  const double second_moment = static_cast<double>(sum_sq) / n;
  double var = second_moment - mean * mean;
  if (var < 0.0) var = 0.0;

  const StoppingTimeStats th = stats_for_rule(config.spec, config.env);

  SimulationSummary s;
  s.empirical_mean = mean;
  s.empirical_std = std::sqrt(var);
  s.theoretical_mean = th.mean;
  s.theoretical_std = th.stddev;
  s.err_mean_pct = err_percent(th.mean, s.empirical_mean);
  s.err_std_pct = s.empirical_std == 0.0 ? 0.0
                                         : err_percent(th.stddev, s.empirical_std);
  s.episodes = config.episodes;
  s.master_seed = config.master_seed;
  return s;
}

ConvergenceTrace convergence_trace(const ExperimentConfig& config,
                                   long long stride) {
  if (config.episodes < 1 || stride < 1) {
    throw std::invalid_argument("convergence_trace: episodes and stride must be >= 1");
  }

  ConvergenceTrace trace;
  trace.stride = stride;
  std::uint64_t sum = 0;
  for (long long i = 0; i < config.episodes; ++i) {
    const long long t = run_episode(
        config.spec, config.env,
        episode_seed(config.master_seed, static_cast<std::uint64_t>(i)));
    sum += static_cast<std::uint64_t>(t);
    const long long completed = i + 1;
    if (completed % stride == 0 || completed == config.episodes) {
      trace.points.emplace_back(completed,
                                static_cast<double>(sum) / static_cast<double>(completed));
    }
  }
  return trace;
}

}  // namespace stoprule
