#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "stoprule/automata.hpp"
#include "stoprule/model.hpp"

namespace stoprule {

/// Safety cap on trials per episode; converts a runaway episode into a
/// diagnosable error.
inline constexpr long long kEpisodeTrialCap = 1'000'000'000;

/// Default master seed used by the CLI; pinned so published numbers are
/// reproducible.
inline constexpr std::uint64_t kDefaultMasterSeed = 42;

/// The PRNG used throughout is splitmix64 (Steele, Lea & Flood; public
/// domain reference sequence). It is fixed and versioned: changing it
/// changes published numbers.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Stateless per-episode seed derivation: splitmix64 finalizer applied to
/// an affine combination of (master_seed, episode_index). Episode seeds do
/// not depend on execution order.
inline std::uint64_t episode_seed(std::uint64_t master_seed,
                                  std::uint64_t episode_index) {
  std::uint64_t state = master_seed + (episode_index + 1) * 0x9E3779B97F4A7C15ull;
  std::uint64_t z = (state ^ (state >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic i.i.d. Bernoulli(p) outcome stream.
class BernoulliStream {
 public:
  BernoulliStream(std::uint64_t seed, const Environment& env)
      : state_(seed), p_(env.p()) {}

  TrialOutcome next() {
    const double u = (splitmix64_next(state_) >> 11) * 0x1.0p-53;
    return u < p_ ? TrialOutcome::Reward : TrialOutcome::Punishment;
  }

 private:
  std::uint64_t state_;
  double p_;
};

struct ExperimentConfig {
  RuleSpec spec;
  Environment env;
  long long episodes = 100'000;
  std::uint64_t master_seed = kDefaultMasterSeed;
};

struct SimulationSummary {
  double empirical_mean = 0.0;
  double empirical_std = 0.0;
  double theoretical_mean = 0.0;
  double theoretical_std = 0.0;
  double err_mean_pct = 0.0;
  double err_std_pct = 0.0;
  long long episodes = 0;
  std::uint64_t master_seed = 0;
};

struct ConvergenceTrace {
  long long stride = 1;
  /// (episode count, mean stop time of the first that many episodes)
  std::vector<std::pair<long long, double>> points;
};

/// Feeds outcomes from `source` (a callable returning TrialOutcome) into a
/// fresh automaton for `spec` until it stops; returns the stop trial.
template <typename OutcomeSource>
long long run_episode_from(const RuleSpec& spec, OutcomeSource&& source) {
  RuleAutomaton a(spec);
  while (!a.is_stopped()) {
    if (a.trials_seen() >= kEpisodeTrialCap) {
      throw std::runtime_error("run_episode: trial cap exceeded");
    }
    a = a.step(source());
  }
  return *a.stopped_at();
}

/// One episode from a deterministic Bernoulli stream.
long long run_episode(const RuleSpec& spec, const Environment& env,
                      std::uint64_t stream_seed);

/// |theoretical - empirical| / empirical * 100.
double err_percent(double theoretical, double empirical);

/// Runs config.episodes independent episodes (seeds derived from the
/// master seed by index) and summarizes against the closed forms.
/// Stop times are accumulated in integer arithmetic, so the result is
/// identical for any episode execution order.
SimulationSummary run_experiment(const ExperimentConfig& config);

/// Running means sampled every `stride` episodes, sharing run_experiment's
/// seed derivation. The entry at N = episodes equals run_experiment's
/// empirical mean.
ConvergenceTrace convergence_trace(const ExperimentConfig& config,
                                   long long stride);

}  // namespace stoprule
