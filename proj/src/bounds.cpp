#include "netctl/bounds.hpp"

#include "netctl/error.hpp"
#include "netctl/kirchhoff.hpp"
#include "netctl/mgraph.hpp"

#include <algorithm>
#include <string>

namespace netctl {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

double choose2(double n) { return n * (n - 1.0) / 2.0; }

}  // namespace

double kf_lower_bound_subchain(int k, int D) {
  if (k <= 2) throw Error(ErrorCode::KTooSmall, "subchain bound needs k > 2, got " + std::to_string(k));
  require(D >= 1, "D >= 1");
  const double d = D;
  return d * d * d / 6.0 + (k - 1) * d * d / 3.0 + (k - 2) * d / 3.0;
}

double mbar_average_degree(int k, int D) {
  require(k >= 1 && D >= 1, "k, D >= 1");
  const double kk = k;
  return (kk * kk * (2.0 * D - 1.0) + kk) / (kk * D + 1.0);
}

double kf_lower_bound_degree(int k, int D) {
  require(k >= 1 && D >= 1, "k, D >= 1");
  const double kk = k, d = D;
  return d * d * kk * (d * kk + 1.0) / (2.0 * d * kk - kk + 1.0);
}

double kf_upper_bound_distance(int k, int D) {
  require(k >= 1 && D >= 2, "k >= 1, D >= 2");
  const double kk = k, d = D;
  return kk * choose2(d) * (0.5 + kk + (2.0 * d - 1.0) * kk / 6.0) + d * choose2(kk + 1.0);
}

double clique_chain_kf_closed_form(int k, int D) {
  require(k >= 1 && D >= 3, "k >= 1, D >= 3");
  const double kk = k, d = D;
  const double denom = kk * (3.0 * kk + 1.0) * (2.0 * kk + 1.0);
  const double c2 = (kk * kk - kk + 1.5) / (3.0 * kk);
  const double c1 =
      (12.0 * kk * kk * kk * kk - (15.0 * kk * kk * kk + 75.0 * kk * kk + 55.0 * kk + 11.0)) /
          (6.0 * denom) +
      2.0 / 3.0;
  const double c0 = (10.0 * kk * kk * kk + 18.0 * kk * kk + 13.0 * kk + 3.0) / (2.0 * denom) - 0.5;
  return d * d * d / 6.0 + c2 * d * d + c1 * d + c0;
}

BoundsReport mbar_bounds_report(int k, int D) {
  BoundsReport r;
  if (k > 2) r.lb_subchain = kf_lower_bound_subchain(k, D);
  r.lb_degree = kf_lower_bound_degree(k, D);
  r.ub_distance = kf_upper_bound_distance(k, D);
  r.kf_exact = kirchhoff_eigen(construct_mbar(k, D).graph).kf;
  return r;
}

}  // namespace netctl
