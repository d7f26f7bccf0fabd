#include "netctl/report.hpp"

#include "netctl/bounds.hpp"
#include "netctl/error.hpp"
#include "netctl/kirchhoff.hpp"
#include "netctl/leader_search.hpp"
#include "netctl/mgraph.hpp"

#include <cfenv>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace netctl {

std::vector<GridCell> table1_cells() {
  std::vector<GridCell> cells;
  for (int D = 3; D <= 7; ++D)
    for (int k = 2; k <= D; ++k) cells.push_back({D, k});
  return cells;
}

std::vector<GridCell> grid_from_lists(std::span<const int> D_list, std::span<const int> k_list) {
  std::vector<GridCell> cells;
  for (int D : D_list)
    for (int k : k_list) cells.push_back({D, k});
  return cells;
}

namespace {

void check_cell(const GridCell& c) {
  if (c.k < 1 || c.D < 2)
    throw Error(ErrorCode::InvalidArgument,
                "cell needs k >= 1, D >= 2 (got D=" + std::to_string(c.D) + ", k=" + std::to_string(c.k) + ")");
}

}  // namespace

std::vector<TableRow> reproduce_table1(std::span<const GridCell> cells, unsigned threads) {
  std::vector<TableRow> rows;
  rows.reserve(cells.size());
  for (const auto& c : cells) {
    check_cell(c);
    const int N = c.k * c.D + 1;
    const auto best = optimal_clique_chain_search(N, c.D, threads);
    const double kf_mbar = kirchhoff_eigen(construct_mbar(c.k, c.D).graph).kf;
    rows.push_back({c.D, c.k, best.spec, best.kf, kf_mbar});
  }
  return rows;
}

std::vector<LeaderComparisonRow> figure_leader_comparison(int D, std::span<const int> N_list) {
  std::vector<LeaderComparisonRow> rows;
  for (int N : N_list) {
    if (D < 1 || N < D + 1)
      throw Error(ErrorCode::InvalidArgument, "need N >= D + 1 (N=" + std::to_string(N) + ")");
    rows.push_back({D, N, N - (D + 1), N - D, pmi_leader_lower_bound(N, D)});
  }
  return rows;
}

std::vector<KfComparisonRow> figure_kf_comparison(std::span<const GridCell> cells, unsigned threads) {
  std::vector<KfComparisonRow> rows;
  for (const auto& c : cells) {
    check_cell(c);
    KfComparisonRow row;
    row.D = c.D;
    row.k = c.k;
    row.N = c.k * c.D + 1;
    row.kf_chain = optimal_clique_chain_search(row.N, c.D, threads).kf;
    const BoundsReport b = mbar_bounds_report(c.k, c.D);
    row.kf_mbar = b.kf_exact;
    row.ratio = row.kf_mbar / row.kf_chain;
    row.lb_subchain = b.lb_subchain;
    row.lb_degree = b.lb_degree;
    row.ub_distance = b.ub_distance;
    rows.push_back(row);
  }
  return rows;
}

std::vector<KfComparisonRow> figure_kf_vs_diameter(int k, std::span<const int> D_list, unsigned threads) {
  const int ks[] = {k};
  const auto cells = grid_from_lists(D_list, ks);
  return figure_kf_comparison(cells, threads);
}

std::vector<KfComparisonRow> figure_kf_vs_leaders(int D, std::span<const int> k_list, unsigned threads) {
  const int ds[] = {D};
  const auto cells = grid_from_lists(ds, k_list);
  return figure_kf_comparison(cells, threads);
}

std::string format_2dp(double value) {
  const int saved = std::fegetround();
  std::fesetround(FE_TONEAREST);
  double rounded = std::nearbyint(value * 100.0) / 100.0;
  std::fesetround(saved);
  if (rounded == 0.0) rounded = 0.0;  // no "-0.00"
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << rounded;
  return out.str();
}

void write_csv(std::ostream& out, std::span<const TableRow> rows) {
  out << "D,k,spec,kf_chain,kf_mbar\n";
  for (const auto& r : rows)
    out << r.D << ',' << r.k << ",\"" << r.optimal_spec.to_string() << "\"," << format_2dp(r.kf_chain) << ','
        << format_2dp(r.kf_mbar) << '\n';
}

void write_csv(std::ostream& out, std::span<const LeaderComparisonRow> rows) {
  out << "D,N,clique_chain_lb,clique_chain_ub,max_controllable\n";
  for (const auto& r : rows)
    out << r.D << ',' << r.N << ',' << r.clique_chain_lb << ',' << r.clique_chain_ub << ',' << r.max_controllable
        << '\n';
}

void write_csv(std::ostream& out, std::span<const KfComparisonRow> rows) {
  out << "D,k,N,kf_chain,kf_mbar,ratio,lb_subchain,lb_degree,ub_distance\n";
  for (const auto& r : rows) {
    out << r.D << ',' << r.k << ',' << r.N << ',' << format_2dp(r.kf_chain) << ',' << format_2dp(r.kf_mbar) << ','
        << format_2dp(r.ratio) << ',' << (r.lb_subchain ? format_2dp(*r.lb_subchain) : "") << ','
        << format_2dp(r.lb_degree) << ',' << format_2dp(r.ub_distance) << '\n';
  }
}

nlohmann::json to_json(std::span<const TableRow> rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"D", r.D}, {"k", r.k}, {"spec", r.optimal_spec.sizes()}, {"kf_chain", r.kf_chain},
                   {"kf_mbar", r.kf_mbar}});
  return out;
}

nlohmann::json to_json(std::span<const LeaderComparisonRow> rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"D", r.D}, {"N", r.N}, {"clique_chain_lb", r.clique_chain_lb},
                   {"clique_chain_ub", r.clique_chain_ub}, {"max_controllable", r.max_controllable}});
  return out;
}

nlohmann::json to_json(std::span<const KfComparisonRow> rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"D", r.D},           {"k", r.k},           {"N", r.N},
                     {"kf_chain", r.kf_chain}, {"kf_mbar", r.kf_mbar}, {"ratio", r.ratio},
                     {"lb_degree", r.lb_degree}, {"ub_distance", r.ub_distance}};
    j["lb_subchain"] = r.lb_subchain ? nlohmann::json(*r.lb_subchain) : nlohmann::json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace netctl
