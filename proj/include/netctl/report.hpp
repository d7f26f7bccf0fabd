#pragma once

#include "netctl/clique_chain.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace netctl {

struct GridCell {
  int D = 0;
  int k = 0;
};

/// The twenty (D, k) cells of the published comparison table: 3 <= D <= 7, 2 <= k <= D.
std::vector<GridCell> table1_cells();

/// Cartesian product of the two lists, D-major.
std::vector<GridCell> grid_from_lists(std::span<const int> D_list, std::span<const int> k_list);

struct TableRow {
  int D = 0;
  int k = 0;
  CliqueChainSpec optimal_spec{{1, 1}};
  double kf_chain = 0.0;
  double kf_mbar = 0.0;
};

/// For each cell: optimal clique chain with N = kD + 1 nodes and diameter D versus
/// Mbar(k, D). Rows come back in input order.
std::vector<TableRow> reproduce_table1(std::span<const GridCell> cells, unsigned threads = 1);

struct LeaderComparisonRow {
  int D = 0;
  int N = 0;
  int clique_chain_lb = 0;   // N - (D+1)
  int clique_chain_ub = 0;   // N - D
  int max_controllable = 0;  // ceil((N-1)/D)
};

/// Leaders needed by clique chains versus the maximally controllable graphs, per N.
std::vector<LeaderComparisonRow> figure_leader_comparison(int D, std::span<const int> N_list);

struct KfComparisonRow {
  int D = 0;
  int k = 0;
  int N = 0;
  double kf_chain = 0.0;
  double kf_mbar = 0.0;
  double ratio = 0.0;  // kf_mbar / kf_chain
  std::optional<double> lb_subchain;
  double lb_degree = 0.0;
  double ub_distance = 0.0;
};

/// K_f of optimal chains and Mbar with the three analytic bounds, per cell.
std::vector<KfComparisonRow> figure_kf_comparison(std::span<const GridCell> cells, unsigned threads = 1);

/// k fixed, D varying.
std::vector<KfComparisonRow> figure_kf_vs_diameter(int k, std::span<const int> D_list, unsigned threads = 1);
/// D fixed, k varying.
std::vector<KfComparisonRow> figure_kf_vs_leaders(int D, std::span<const int> k_list, unsigned threads = 1);

/// Round-half-even to two decimals, formatted with exactly two digits.
std::string format_2dp(double value);

// CSV columns are frozen:
//   table1:  D,k,spec,kf_chain,kf_mbar
//   leaders: D,N,clique_chain_lb,clique_chain_ub,max_controllable
//   kf:      D,k,N,kf_chain,kf_mbar,ratio,lb_subchain,lb_degree,ub_distance
void write_csv(std::ostream& out, std::span<const TableRow> rows);
void write_csv(std::ostream& out, std::span<const LeaderComparisonRow> rows);
void write_csv(std::ostream& out, std::span<const KfComparisonRow> rows);

nlohmann::json to_json(std::span<const TableRow> rows);
nlohmann::json to_json(std::span<const LeaderComparisonRow> rows);
nlohmann::json to_json(std::span<const KfComparisonRow> rows);

}  // namespace netctl
