#pragma once

#include "netctl/graph.hpp"

#include <vector>

namespace netctl {

enum class KirchhoffMethod { eigen, resistance };

struct KirchhoffResult {
  double kf = 0.0;
  /// Nonzero Laplacian eigenvalues in ascending order; empty for the resistance route.
  std::vector<double> eigenvalues;
  KirchhoffMethod method = KirchhoffMethod::eigen;
};

/// K_f = N * sum_{i>=2} 1/lambda_i over the weighted Laplacian spectrum.
///
/// An eigenvalue counts as zero when |lambda| < 1e-9 * max|lambda|. More than
/// one zero eigenvalue means the graph is disconnected.
KirchhoffResult kirchhoff_eigen(const Graph& g, const EdgeWeights& w);
KirchhoffResult kirchhoff_eigen(const Graph& g);

/// Same quantity as the sum of pairwise effective resistances, computed from
/// the inverse of the Laplacian with the last node grounded:
/// K_f = N * tr(M) - 1^T M 1.
KirchhoffResult kirchhoff_resistance(const Graph& g, const EdgeWeights& w);
KirchhoffResult kirchhoff_resistance(const Graph& g);

KirchhoffResult kirchhoff(const Graph& g, const EdgeWeights& w, KirchhoffMethod method);

/// Largest K_f over weights boxed in [w_min, w_max]. K_f is decreasing in every
/// weight, so the maximum sits at all-w_min and equals K_f(unit) / w_min.
double worst_case_kirchhoff(const Graph& g, double w_min);

/// Steady-state dispersion of noisy consensus, K_f / (2 N^2).
double theoretical_dispersion(const Graph& g, const EdgeWeights& w);

}  // namespace netctl
