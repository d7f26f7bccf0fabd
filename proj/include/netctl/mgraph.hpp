#pragma once

#include "netctl/graph.hpp"
#include "netctl/ssc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace netctl {

/// Role of a node in the minimal-leader construction: leader l_i, the hub x, or
/// path node u_{i,j} (i in 1..k, j in 1..D-1). Indices are 1-based like the labels.
struct MRole {
  enum class Kind { leader, hub, path };
  Kind kind = Kind::hub;
  int i = 0;
  int j = 0;

  /// "l3", "x", "u2,4".
  std::string label() const;
  friend bool operator==(const MRole&, const MRole&) = default;
};

/// A constructed graph together with its leaders and node roles.
///
/// Canonical numbering of the untrimmed graphs: l_i -> i-1, x -> k,
/// u_{i,j} -> k + 1 + (j-1)k + (i-1). Trimming keeps survivors in that relative order.
struct MGraph {
  Graph graph;
  LeaderSet leaders;
  std::vector<MRole> roles;
  int k = 0;
  int D = 0;

  std::optional<NodeId> find(const MRole& role) const;
  std::vector<std::string> labels() const;
};

/// Sparse construction M(k, D): kD + 1 nodes whose distance-to-leader vectors form a
/// full PMI sequence with k leaders. Requires k >= 1, D >= 1.
MGraph construct_m(int k, int D);

/// M(k, D) plus the maximal distance-preserving edge set (column cliques and the
/// diagonal links to the previous column). Diameter D.
MGraph construct_mbar(int k, int D);

/// Deletes path nodes of an untrimmed Mbar(k, D) layer by layer from the far end,
/// in the order u_{1,j}, u_{k,j}, u_{k-1,j}, ..., u_{3,j} for j = D-1, D-2, ..., until
/// `target_nodes` remain. u_{2,j} is never deleted, so the diameter stays D.
/// Throws InfeasibleTarget unless k == ceil((target_nodes-1)/D) and target_nodes <= kD+1.
MGraph trim_to_n(const MGraph& mbar, int target_nodes);

/// Builds Mbar for arbitrary (N, D): k = ceil((N-1)/D), then trims to N nodes.
MGraph mbar_for(int N, int D);

/// Node order l_1..l_k, x, u_{2,1}..u_{k,1}, u_{1,1}, u_{2,2}, ..., u_{k,D-1}, u_{1,D-1}
/// restricted to nodes present in `m`, paired with the block witnesses. Validates as a
/// PMI sequence against dl_matrix(m.graph, m.leaders).
PMISequence construction_pmi_sequence(const MGraph& m);

struct ExpectedDL {
  DLMatrix dl;              // row p is the p-th vector of the block sequence
  PMISequence sequence;     // order = 0..kD, witnesses from the block structure
  std::vector<MRole> roles; // role of the node that realizes row p
};

/// The block sequence [leader block, S(1,k), ..., S(D-1,k), all-D column] written
/// down from the formula alone, without building a graph.
ExpectedDL expected_dl_vectors(int k, int D);

}  // namespace netctl
