#pragma once

#include <algorithm>
#include <optional>

namespace netctl {

// Kirchhoff-index bounds for the densified maximally controllable graph
// Mbar(k, D) with N = kD + 1 nodes. All of these are arithmetic on (k, D).

/// D^3/6 + (k-1)D^2/3 + (k-2)D/3; needs k > 2 (KTooSmall otherwise) and D >= 1.
double kf_lower_bound_subchain(int k, int D);

/// Average degree of Mbar(k, D): (k^2 (2D-1) + k) / (kD + 1).
double mbar_average_degree(int k, int D);

/// (N-1)^2 / deg_av(Mbar) = D^2 k (Dk+1) / (2Dk - k + 1); k, D >= 1.
double kf_lower_bound_degree(int k, int D);

/// Sum of all pairwise hop distances in Mbar(k, D):
/// k C(D,2) [1/2 + k + (2D-1)k/6] + D C(k+1,2); k >= 1, D >= 2.
double kf_upper_bound_distance(int k, int D);

/// Exact K_f of the clique chain G_{D-1}(k+1, k, ..., k) (D cliques) from its
/// closed-form polynomial in (k, D). Valid for k >= 1, D >= 3.
double clique_chain_kf_closed_form(int k, int D);

struct BoundsReport {
  std::optional<double> lb_subchain;  // absent when k <= 2
  double lb_degree = 0.0;
  double ub_distance = 0.0;
  double kf_exact = 0.0;

  double best_lower() const { return lb_subchain ? std::max(*lb_subchain, lb_degree) : lb_degree; }
};

/// Evaluates every bound and the exact K_f of the constructed Mbar(k, D).
BoundsReport mbar_bounds_report(int k, int D);

}  // namespace netctl
