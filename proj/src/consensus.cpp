#include "netctl/consensus.hpp"

#include "netctl/error.hpp"
#include "netctl/kirchhoff.hpp"
#include "netctl/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>

namespace netctl {

namespace {

struct Spectrum {
  double lambda_2 = 0.0;
  double lambda_max = 0.0;
};

Spectrum extreme_eigenvalues(const SquareMatrix& L) {
  Eigen::SelfAdjointEigenSolver<SquareMatrix> solver(L, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return {ev.size() > 1 ? ev(1) : 0.0, ev(ev.size() - 1)};
}

void check_step(double dt, double lambda_max) {
  if (!(dt > 0.0)) throw Error(ErrorCode::InvalidArgument, "dt must be positive");
  if (dt * lambda_max >= 2.0)
    throw Error(ErrorCode::UnstableStep,
                "dt=" + std::to_string(dt) + " >= 2/lambda_max=" + std::to_string(2.0 / lambda_max));
}

void em_step(const SquareMatrix& L, Eigen::VectorXd& x, double dt, double noise_sd,
             std::normal_distribution<double>& normal, std::mt19937_64& rng) {
  Eigen::VectorXd drift = L * x;
  x -= dt * drift;
  if (noise_sd > 0.0) {
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) += noise_sd * normal(rng);
  }
}

}  // namespace

double population_variance(const Eigen::VectorXd& x) {
  const double mean = x.mean();
  return (x.array() - mean).square().mean();
}

Eigen::VectorXd run_consensus(const Graph& g, const EdgeWeights& w, Eigen::VectorXd x, double dt,
                              std::size_t steps, double noise_scale, std::mt19937_64& rng) {
  const SquareMatrix L = laplacian(g, w);
  check_step(dt, extreme_eigenvalues(L).lambda_max);
  std::normal_distribution<double> normal(0.0, 1.0);
  const double noise_sd = noise_scale * std::sqrt(dt);
  for (std::size_t s = 0; s < steps; ++s) em_step(L, x, dt, noise_sd, normal, rng);
  return x;
}

DispersionEstimate simulate_dispersion(const Graph& g, const EdgeWeights& w, const SimConfig& cfg) {
  if (!(cfg.burn_in > 0.0 && cfg.burn_in < 1.0))
    throw Error(ErrorCode::InvalidArgument, "burn_in must lie in (0, 1)");
  if (cfg.trials < 2) throw Error(ErrorCode::InvalidArgument, "need at least two trials for an interval");
  if (cfg.noise_scale < 0.0) throw Error(ErrorCode::InvalidArgument, "noise_scale must be >= 0");

  DispersionEstimate est;
  est.h_theory = theoretical_dispersion(g, w);  // throws Disconnected
  const SquareMatrix L = laplacian(g, w);
  const Spectrum spec = extreme_eigenvalues(L);
  est.dt = cfg.dt > 0.0 ? cfg.dt : 0.05 / spec.lambda_max;
  check_step(est.dt, spec.lambda_max);
  est.horizon = cfg.horizon > 0.0 ? cfg.horizon : 50.0 / (spec.lambda_2 * (1.0 - cfg.burn_in));
  est.trials = cfg.trials;

  const auto steps = static_cast<std::size_t>(std::ceil(est.horizon / est.dt));
  const auto burn_steps = static_cast<std::size_t>(std::floor(cfg.burn_in * static_cast<double>(steps)));
  if (steps <= burn_steps) throw Error(ErrorCode::InvalidArgument, "horizon shorter than one step");
  const double noise_sd = cfg.noise_scale * std::sqrt(est.dt);

  std::vector<double> trial_mean(static_cast<std::size_t>(cfg.trials), 0.0);
  parallel_for(trial_mean.size(), cfg.threads, [&](std::size_t t) {
    std::mt19937_64 rng(derive_seed(cfg.seed, t));
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(g.num_nodes()));
    double acc = 0.0;
    for (std::size_t s = 0; s < steps; ++s) {
      em_step(L, x, est.dt, noise_sd, normal, rng);
      if (s >= burn_steps) acc += population_variance(x);
    }
    trial_mean[t] = acc / static_cast<double>(steps - burn_steps);
  });

  const double n = static_cast<double>(trial_mean.size());
  est.h_hat = std::accumulate(trial_mean.begin(), trial_mean.end(), 0.0) / n;
  double ss = 0.0;
  for (double m : trial_mean) ss += (m - est.h_hat) * (m - est.h_hat);
  const double sd = std::sqrt(ss / (n - 1.0));
  est.ci95 = 1.96 * sd / std::sqrt(n);
  est.rel_err = est.h_theory > 0.0 ? std::abs(est.h_hat - est.h_theory) / est.h_theory : 0.0;
  return est;
}

}  // namespace netctl
