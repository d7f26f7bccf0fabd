#include "netctl/graph.hpp"

#include "netctl/error.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace netctl {

namespace {

Edge normalized(NodeId u, NodeId v) { return u < v ? Edge{u, v} : Edge{v, u}; }

}  // namespace

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::size_t num_nodes, std::span<const Edge> edges) {
  if (num_nodes == 0) throw Error(ErrorCode::InvalidArgument, "graph needs at least one node");
  Graph g;
  g.edges_.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes)
      throw Error(ErrorCode::OutOfRangeNode,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with N=" +
                      std::to_string(num_nodes));
    if (u == v) throw Error(ErrorCode::SelfLoop, "node " + std::to_string(u));
    g.edges_.push_back(normalized(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(num_nodes, {});
  for (const auto& [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

EdgeWeights::EdgeWeights(const Graph& g, std::vector<double> weights, double w_min, double w_max)
    : edges_(g.edges()), weights_(std::move(weights)), w_min_(w_min), w_max_(w_max) {
  if (!(w_min > 0.0) || !(w_max > 0.0) || w_min > w_max)
    throw Error(ErrorCode::NonpositiveRange, "need 0 < w_min <= w_max");
  if (weights_.size() != edges_.size())
    throw Error(ErrorCode::MissingWeight, std::to_string(weights_.size()) + " weights for " +
                                              std::to_string(edges_.size()) + " edges");
  for (double w : weights_) {
    if (!(w >= w_min && w <= w_max))
      throw Error(ErrorCode::InvalidArgument,
                  "weight " + std::to_string(w) + " outside [w_min, w_max]");
  }
}

EdgeWeights EdgeWeights::uniform(const Graph& g, double value) {
  return EdgeWeights(g, std::vector<double>(g.num_edges(), value), value, value);
}

double EdgeWeights::weight(NodeId u, NodeId v) const {
  const Edge e = normalized(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e)
    throw Error(ErrorCode::MissingWeight,
                "no weight for (" + std::to_string(u) + "," + std::to_string(v) + ")");
  return weights_[static_cast<std::size_t>(it - edges_.begin())];
}

EdgeWeights EdgeWeights::scaled(double alpha) const {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "scale factor must be positive");
  EdgeWeights out = *this;
  for (double& w : out.weights_) w *= alpha;
  out.w_min_ *= alpha;
  out.w_max_ *= alpha;
  return out;
}

SquareMatrix laplacian(const Graph& g, const EdgeWeights& w) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  SquareMatrix L = SquareMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    const double wij = w.weight(u, v);
    const auto iu = static_cast<Eigen::Index>(u);
    const auto iv = static_cast<Eigen::Index>(v);
    L(iu, iv) -= wij;
    L(iv, iu) -= wij;
    L(iu, iu) += wij;
    L(iv, iv) += wij;
  }
  return L;
}

SquareMatrix laplacian(const Graph& g) { return laplacian(g, EdgeWeights::uniform(g)); }

namespace {

std::vector<int> bfs_raw(const Graph& g, NodeId source) {
  std::vector<int> dist(g.num_nodes(), -1);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (NodeId w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.num_nodes() == 0) return false;
  const auto dist = bfs_raw(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  if (source >= g.num_nodes())
    throw Error(ErrorCode::OutOfRangeNode, "source " + std::to_string(source));
  auto dist = bfs_raw(g, source);
  for (std::size_t v = 0; v < dist.size(); ++v) {
    if (dist[v] < 0)
      throw Error(ErrorCode::Disconnected,
                  "node " + std::to_string(v) + " unreachable from " + std::to_string(source));
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

int eccentricity(const Graph& g, NodeId v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

int diameter(const Graph& g) {
  int best = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

}  // namespace netctl
