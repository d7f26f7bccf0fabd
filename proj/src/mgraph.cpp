#include "netctl/mgraph.hpp"

#include "netctl/error.hpp"

#include <algorithm>

namespace netctl {

std::string MRole::label() const {
  switch (kind) {
    case Kind::leader: return "l" + std::to_string(i);
    case Kind::hub: return "x";
    case Kind::path: return "u" + std::to_string(i) + "," + std::to_string(j);
  }
  return "?";
}

std::optional<NodeId> MGraph::find(const MRole& role) const {
  auto it = std::find(roles.begin(), roles.end(), role);
  if (it == roles.end()) return std::nullopt;
  return static_cast<NodeId>(it - roles.begin());
}

std::vector<std::string> MGraph::labels() const {
  std::vector<std::string> out;
  out.reserve(roles.size());
  for (const auto& r : roles) out.push_back(r.label());
  return out;
}

namespace {

struct Layout {
  int k;
  int D;
  NodeId leader(int i) const { return static_cast<NodeId>(i - 1); }
  NodeId hub() const { return static_cast<NodeId>(k); }
  NodeId path(int i, int j) const { return static_cast<NodeId>(k + 1 + (j - 1) * k + (i - 1)); }
  std::size_t size() const { return static_cast<std::size_t>(k * D + 1); }

  std::vector<MRole> roles() const {
    std::vector<MRole> out(size());
    for (int i = 1; i <= k; ++i) out[leader(i)] = {MRole::Kind::leader, i, 0};
    out[hub()] = {MRole::Kind::hub, 0, 0};
    for (int j = 1; j < D; ++j)
      for (int i = 1; i <= k; ++i) out[path(i, j)] = {MRole::Kind::path, i, j};
    return out;
  }
};

void check_parameters(int k, int D) {
  if (k < 1 || D < 1)
    throw Error(ErrorCode::InvalidArgument,
                "construction needs k >= 1, D >= 1 (got k=" + std::to_string(k) + ", D=" + std::to_string(D) + ")");
}

std::vector<Edge> sparse_edges(const Layout& at) {
  const int k = at.k, D = at.D;
  std::vector<Edge> edges;
  for (int a = 1; a <= k; ++a) {
    for (int b = a + 1; b <= k; ++b) edges.emplace_back(at.leader(a), at.leader(b));
    edges.emplace_back(at.hub(), at.leader(a));
  }
  if (D >= 2) {
    for (int i = 1; i <= k; ++i) edges.emplace_back(at.hub(), at.path(i, 1));
    for (int i = 2; i <= k; ++i)
      for (int p = i; p <= k; ++p) edges.emplace_back(at.path(i, 1), at.leader(p));
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j + 1 <= D - 1; ++j) edges.emplace_back(at.path(i, j), at.path(i, j + 1));
  }
  return edges;
}

MGraph assemble(const Layout& at, const std::vector<Edge>& edges) {
  std::vector<NodeId> leaders;
  for (int i = 1; i <= at.k; ++i) leaders.push_back(at.leader(i));
  Graph g = build_graph(at.size(), edges);
  LeaderSet ls(std::move(leaders), g.num_nodes());
  return MGraph{std::move(g), std::move(ls), at.roles(), at.k, at.D};
}

}  // namespace

MGraph construct_m(int k, int D) {
  check_parameters(k, D);
  const Layout at{k, D};
  return assemble(at, sparse_edges(at));
}

MGraph construct_mbar(int k, int D) {
  check_parameters(k, D);
  const Layout at{k, D};
  auto edges = sparse_edges(at);
  for (int j = 1; j < D; ++j) {
    for (int a = 1; a <= k; ++a)
      for (int b = a + 1; b <= k; ++b) edges.emplace_back(at.path(a, j), at.path(b, j));
  }
  for (int j = 2; j < D; ++j) {
    for (int i = 2; i <= k; ++i) {
      edges.emplace_back(at.path(i, j), at.path(1, j - 1));
      for (int p = i + 1; p <= k; ++p) edges.emplace_back(at.path(i, j), at.path(p, j - 1));
    }
  }
  return assemble(at, edges);
}

MGraph trim_to_n(const MGraph& mbar, int target_nodes) {
  const int k = mbar.k, D = mbar.D;
  const int full = k * D + 1;
  if (static_cast<int>(mbar.graph.num_nodes()) != full)
    throw Error(ErrorCode::InfeasibleTarget, "trimming expects an untrimmed construction");
  if (target_nodes < 2 || target_nodes > full || (target_nodes - 1 + D - 1) / D != k)
    throw Error(ErrorCode::InfeasibleTarget,
                "N_a=" + std::to_string(target_nodes) + " needs k=ceil((N_a-1)/D), have k=" + std::to_string(k));
  if (k == 1 && target_nodes != full)
    throw Error(ErrorCode::InfeasibleTarget, "a single-leader path cannot lose nodes without losing diameter");

  std::vector<NodeId> doomed;
  const Layout at{k, D};
  for (int j = D - 1; j >= 1 && static_cast<int>(doomed.size()) < full - target_nodes; --j) {
    doomed.push_back(at.path(1, j));
    for (int i = k; i >= 3; --i) doomed.push_back(at.path(i, j));
  }
  doomed.resize(static_cast<std::size_t>(full - target_nodes));

  std::vector<bool> keep(mbar.graph.num_nodes(), true);
  for (NodeId v : doomed) keep[v] = false;
  std::vector<NodeId> new_id(mbar.graph.num_nodes(), 0);
  MGraph out{Graph{}, mbar.leaders, {}, k, D};
  NodeId next = 0;
  for (NodeId v = 0; v < keep.size(); ++v) {
    if (!keep[v]) continue;
    new_id[v] = next++;
    out.roles.push_back(mbar.roles[v]);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : mbar.graph.edges()) {
    if (keep[u] && keep[v]) edges.emplace_back(new_id[u], new_id[v]);
  }
  out.graph = build_graph(next, edges);
  std::vector<NodeId> leaders;
  for (NodeId l : mbar.leaders) leaders.push_back(new_id[l]);
  out.leaders = LeaderSet(std::move(leaders), next);
  return out;
}

MGraph mbar_for(int N, int D) {
  if (N < 2 || D < 1) throw Error(ErrorCode::InvalidArgument, "need N >= 2, D >= 1");
  const int k = (N - 1 + D - 1) / D;
  return trim_to_n(construct_mbar(k, D), N);
}

namespace {

// Block order of the construction with each entry's witness (1-based leader index).
std::vector<std::pair<MRole, int>> block_order(int k, int D) {
  std::vector<std::pair<MRole, int>> out;
  for (int i = 1; i <= k; ++i) out.push_back({{MRole::Kind::leader, i, 0}, i});
  out.push_back({{MRole::Kind::hub, 0, 0}, 1});
  for (int j = 1; j < D; ++j) {
    for (int i = 2; i <= k; ++i) out.push_back({{MRole::Kind::path, i, j}, i});
    out.push_back({{MRole::Kind::path, 1, j}, 1});
  }
  return out;
}

}  // namespace

PMISequence construction_pmi_sequence(const MGraph& m) {
  PMISequence seq;
  for (const auto& [role, witness] : block_order(m.k, m.D)) {
    if (auto v = m.find(role)) {
      seq.order.push_back(*v);
      seq.witness.push_back(static_cast<std::size_t>(witness - 1));
    }
  }
  return seq;
}

ExpectedDL expected_dl_vectors(int k, int D) {
  check_parameters(k, D);
  ExpectedDL out;
  for (int i = 0; i < k; ++i) out.dl.leader_order.push_back(static_cast<NodeId>(i));
  for (const auto& [role, witness] : block_order(k, D)) {
    std::vector<int> row(static_cast<std::size_t>(k));
    for (int a = 1; a <= k; ++a) {
      int value = 0;
      switch (role.kind) {
        case MRole::Kind::leader: value = (a == role.i) ? 0 : 1; break;
        case MRole::Kind::hub: value = 1; break;
        case MRole::Kind::path:
          // u_{1,j}: all j+1; u_{i,j}, i>1: first i-1 entries j+1, the rest j.
          value = (role.i == 1 || a < role.i) ? role.j + 1 : role.j;
          break;
      }
      row[static_cast<std::size_t>(a - 1)] = value;
    }
    out.sequence.order.push_back(out.dl.rows.size());
    out.sequence.witness.push_back(static_cast<std::size_t>(witness - 1));
    out.dl.rows.push_back(std::move(row));
    out.roles.push_back(role);
  }
  return out;
}

}  // namespace netctl
