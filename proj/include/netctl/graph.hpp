#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace netctl {

using NodeId = std::size_t;

/// Undirected edge stored with `first < second`.
using Edge = std::pair<NodeId, NodeId>;

/// Dense real matrix; Laplacians, Gramians and controllability matrices all use it.
using SquareMatrix = Eigen::MatrixXd;

/// Simple undirected graph over nodes 0..N-1 with sorted adjacency lists.
///
/// Immutable once built. Connectivity is not enforced here; analysis entry
/// points check it and raise `ErrorCode::Disconnected`.
class Graph {
public:
  Graph() = default;

  std::size_t num_nodes() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId v) const { return adjacency_.at(v); }
  std::size_t degree(NodeId v) const { return adjacency_.at(v).size(); }
  bool has_edge(NodeId u, NodeId v) const;

  /// Canonical edge list, lexicographically sorted, each edge with first < second.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  friend Graph build_graph(std::size_t, std::span<const Edge>);

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Edge> edges_;
};

/// Builds a graph from an edge list; duplicate and reversed pairs collapse to one edge.
/// Throws OutOfRangeNode or SelfLoop.
Graph build_graph(std::size_t num_nodes, std::span<const Edge> edges);

inline Graph build_graph(std::size_t num_nodes, std::initializer_list<Edge> edges) {
  return build_graph(num_nodes, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Positive per-edge coupling strengths with their admissible box [w_min, w_max].
class EdgeWeights {
public:
  /// `weights[i]` belongs to `g.edges()[i]`. Every weight must lie in [w_min, w_max].
  EdgeWeights(const Graph& g, std::vector<double> weights, double w_min, double w_max);

  /// All edges set to `value`, with w_min = w_max = value.
  static EdgeWeights uniform(const Graph& g, double value = 1.0);

  /// Weight of edge (u, v); throws MissingWeight when it is not an edge of the weighted graph.
  double weight(NodeId u, NodeId v) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& values() const noexcept { return weights_; }
  double w_min() const noexcept { return w_min_; }
  double w_max() const noexcept { return w_max_; }

  /// Every weight (and the box) multiplied by alpha > 0.
  EdgeWeights scaled(double alpha) const;

private:
  EdgeWeights() = default;

  std::vector<Edge> edges_;
  std::vector<double> weights_;
  double w_min_ = 1.0;
  double w_max_ = 1.0;
};

/// L = Delta - A for the weighted graph. Throws MissingWeight if `w` does not cover every edge.
SquareMatrix laplacian(const Graph& g, const EdgeWeights& w);

/// Unit-weight Laplacian.
SquareMatrix laplacian(const Graph& g);

bool is_connected(const Graph& g);

/// Hop distances from `source`. Throws OutOfRangeNode or Disconnected.
std::vector<int> bfs_distances(const Graph& g, NodeId source);

/// Row v holds bfs_distances(g, v). Throws Disconnected.
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

int eccentricity(const Graph& g, NodeId v);
int diameter(const Graph& g);

}  // namespace netctl
