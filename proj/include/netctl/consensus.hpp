#pragma once

#include "netctl/graph.hpp"

#include <cstdint>
#include <random>

namespace netctl {

struct SimConfig {
  /// Euler-Maruyama step; 0 selects 0.05 / lambda_max.
  double dt = 0.0;
  /// Total simulated time per trial; 0 selects 50 / (lambda_2 (1 - burn_in)).
  double horizon = 0.0;
  /// Leading fraction of each trial discarded before averaging, in (0, 1).
  double burn_in = 0.3;
  int trials = 200;
  std::uint64_t seed = 0;
  /// Standard deviation multiplier of the increments; 0 gives noiseless consensus.
  double noise_scale = 1.0;
  unsigned threads = 1;
};

struct DispersionEstimate {
  double h_hat = 0.0;
  double h_theory = 0.0;
  double rel_err = 0.0;
  /// Half-width of the 95% interval of h_hat across trials.
  double ci95 = 0.0;
  double dt = 0.0;
  double horizon = 0.0;
  int trials = 0;
};

/// Integrates dx = -L x dt + noise_scale dW from `x` for `steps` steps of size dt.
/// Throws UnstableStep when dt >= 2 / lambda_max.
Eigen::VectorXd run_consensus(const Graph& g, const EdgeWeights& w, Eigen::VectorXd x, double dt,
                              std::size_t steps, double noise_scale, std::mt19937_64& rng);

/// Population variance (1/N) sum_i (x_i - mean(x))^2.
double population_variance(const Eigen::VectorXd& x);

/// Monte Carlo estimate of the steady-state dispersion of noisy consensus from the
/// origin, averaged over time after burn-in and over independent trials, compared
/// against K_f / (2 N^2). Throws UnstableStep, Disconnected, InvalidArgument.
DispersionEstimate simulate_dispersion(const Graph& g, const EdgeWeights& w, const SimConfig& cfg = {});

}  // namespace netctl
