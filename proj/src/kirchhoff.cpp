#include "netctl/kirchhoff.hpp"

#include "netctl/error.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace netctl {

namespace {

constexpr double kZeroEigenvalueRelTol = 1e-9;

}  // namespace

KirchhoffResult kirchhoff_eigen(const Graph& g, const EdgeWeights& w) {
  const SquareMatrix L = laplacian(g, w);
  KirchhoffResult result;
  result.method = KirchhoffMethod::eigen;
  if (g.num_nodes() == 1) return result;

  Eigen::SelfAdjointEigenSolver<SquareMatrix> solver(L, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double scale = lambda.cwiseAbs().maxCoeff();
  const double cutoff = kZeroEigenvalueRelTol * scale;

  std::size_t zeros = 0;
  double sum_inv = 0.0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) < cutoff) {
      ++zeros;
      continue;
    }
    result.eigenvalues.push_back(lambda(i));
    sum_inv += 1.0 / lambda(i);
  }
  if (zeros != 1 || scale == 0.0)
    throw Error(ErrorCode::Disconnected, "Laplacian has " + std::to_string(zeros) +
                                             " zero eigenvalues");
  result.kf = static_cast<double>(g.num_nodes()) * sum_inv;
  return result;
}

KirchhoffResult kirchhoff_eigen(const Graph& g) { return kirchhoff_eigen(g, EdgeWeights::uniform(g)); }

KirchhoffResult kirchhoff_resistance(const Graph& g, const EdgeWeights& w) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "resistance route needs a connected graph");
  KirchhoffResult result;
  result.method = KirchhoffMethod::resistance;
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  if (n == 1) return result;

  const SquareMatrix L = laplacian(g, w);
  const SquareMatrix grounded = L.topLeftCorner(n - 1, n - 1);
  Eigen::LLT<SquareMatrix> chol(grounded);
  if (chol.info() != Eigen::Success)
    throw Error(ErrorCode::Disconnected, "grounded Laplacian is not positive definite");
  const SquareMatrix M = chol.solve(SquareMatrix::Identity(n - 1, n - 1));
  result.kf = static_cast<double>(n) * M.trace() - M.sum();
  return result;
}

KirchhoffResult kirchhoff_resistance(const Graph& g) {
  return kirchhoff_resistance(g, EdgeWeights::uniform(g));
}

KirchhoffResult kirchhoff(const Graph& g, const EdgeWeights& w, KirchhoffMethod method) {
  return method == KirchhoffMethod::eigen ? kirchhoff_eigen(g, w) : kirchhoff_resistance(g, w);
}

double worst_case_kirchhoff(const Graph& g, double w_min) {
  if (!(w_min > 0.0)) throw Error(ErrorCode::NonpositiveWmin, "w_min must be positive");
  return kirchhoff_eigen(g).kf / w_min;
}

double theoretical_dispersion(const Graph& g, const EdgeWeights& w) {
  const double n = static_cast<double>(g.num_nodes());
  return kirchhoff_eigen(g, w).kf / (2.0 * n * n);
}

}  // namespace netctl
