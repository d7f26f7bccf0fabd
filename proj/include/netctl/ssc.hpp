#pragma once

#include "netctl/graph.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace netctl {

/// Ordered, nonempty list of distinct leader nodes. Position j is leader l_{j+1};
/// the order fixes the component order of every distance-to-leader vector.
class LeaderSet {
public:
  /// Throws InvalidArgument for an empty or repeated list and OutOfRangeNode
  /// when a leader is not a node of a graph with `num_nodes` nodes.
  LeaderSet(std::vector<NodeId> leaders, std::size_t num_nodes);

  std::size_t size() const noexcept { return leaders_.size(); }
  NodeId operator[](std::size_t j) const { return leaders_[j]; }
  const std::vector<NodeId>& nodes() const noexcept { return leaders_; }
  bool contains(NodeId v) const;

  auto begin() const noexcept { return leaders_.begin(); }
  auto end() const noexcept { return leaders_.end(); }

  friend bool operator==(const LeaderSet&, const LeaderSet&) = default;

private:
  std::vector<NodeId> leaders_;
};

/// Row i is the distance-to-leader vector S_i = [d(i, l_1), ..., d(i, l_k)].
struct DLMatrix {
  std::vector<std::vector<int>> rows;
  std::vector<NodeId> leader_order;

  std::size_t num_rows() const noexcept { return rows.size(); }
  std::size_t num_leaders() const noexcept { return leader_order.size(); }
  int at(std::size_t node, std::size_t leader) const { return rows[node][leader]; }
};

/// Hop distances from every node to every leader. Throws Disconnected.
DLMatrix dl_matrix(const Graph& g, const LeaderSet& leaders);

/// Ordered prefix of rows of a DLMatrix with a witness coordinate per entry.
/// `witness[i]` is a 0-based leader index.
struct PMISequence {
  std::vector<NodeId> order;
  std::vector<std::size_t> witness;

  std::size_t length() const noexcept { return order.size(); }
};

/// True iff for every position i and every later j,
/// S[order[i]][witness[i]] < S[order[j]][witness[i]].
/// Throws IndexMismatch when a row or witness index is out of range.
bool validate_pmi(const PMISequence& seq, const DLMatrix& dl);

enum class PmiMode { exact, greedy };

/// Longest pseudo-monotonically increasing sequence of distance-to-leader vectors.
///
/// Exact mode: memoized search over the per-leader threshold vector (a node may
/// follow the current prefix iff every coordinate exceeds the threshold), pruned
/// with the step-count bound sum_a (max_a - t_a). Throws BudgetExceeded after
/// `budget` state expansions. Greedy mode returns a valid, possibly shorter sequence.
PMISequence longest_pmi(const DLMatrix& dl, PmiMode mode = PmiMode::exact,
                        std::uint64_t budget = 10'000'000);

/// Disjoint cells covering the node set, each sorted, cells ordered by smallest member.
struct Partition {
  std::vector<std::vector<NodeId>> cells;

  std::size_t num_cells() const noexcept { return cells.size(); }
  bool all_singletons() const;
};

/// Leaders in singleton cells and node-to-cell degrees constant within each cell
/// towards every other cell.
bool is_lieep(const Graph& g, const LeaderSet& leaders, const Partition& p);

/// Coarsest leader-invariant external equitable partition by iterated refinement,
/// starting from {leader singletons} + {all followers}.
Partition maximal_lieep(const Graph& g, const LeaderSet& leaders);

/// Refines an arbitrary starting partition to its external-equitable fixed point.
Partition refine_external_equitable(const Graph& g, const Partition& start);

// ---- controllability matrix rank ------------------------------------------------

/// Gamma = [B, -LB, (-L)^2 B, ..., (-L)^{N-1} B] with B the leader indicator columns.
SquareMatrix controllability_matrix(const SquareMatrix& L, const LeaderSet& leaders);

/// Numerical rank of an arbitrary matrix: #{sigma > 1e-9 * sigma_max * n}, n = rows.
std::size_t numerical_rank(const SquareMatrix& m);

/// Dimension of the controllable subspace span{B, LB, L^2 B, ...}, computed with an
/// orthonormal block-Krylov basis. A new direction is accepted when its residual
/// singular value exceeds 1e-9 * N * ||L||_2.
std::size_t controllable_dimension(const SquareMatrix& L, const LeaderSet& leaders);

struct RankOracleResult {
  std::size_t min_rank = 0;
  std::size_t max_rank = 0;
  std::size_t draws = 0;  // trials + the deterministic all-w_min draw
  /// Always an estimate of the dimension of SSC, never a certificate.
  bool estimate = true;
};

/// Minimum controllable-subspace dimension over `trials` random weightings drawn
/// uniformly from [w_min, w_max] plus the all-w_min weighting. Trial t uses a seed
/// derived from (seed, t), so results do not depend on `threads`.
RankOracleResult ssc_rank_oracle(const Graph& g, const LeaderSet& leaders, int trials,
                                 double w_min, double w_max, std::uint64_t seed = 0,
                                 unsigned threads = 1);

}  // namespace netctl
