#include <doctest.h>

#include "corpus.hpp"
#include "oracles.hpp"

#include "netctl/clique_chain.hpp"
#include "netctl/error.hpp"
#include "netctl/graph.hpp"
#include "netctl/mgraph.hpp"

#include <random>

using namespace netctl;
using namespace testing_support;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an exception");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("build_graph basics") {
  const auto g = build_graph(2, {{0, 1}});
  CHECK(g.num_nodes() == 2);
  CHECK(g.num_edges() == 1);

  const auto dup = build_graph(3, {{0, 1}, {1, 0}});
  CHECK(dup.num_edges() == 1);
  CHECK(dup.has_edge(1, 0));
  CHECK(dup.degree(2) == 0);
  CHECK_FALSE(is_connected(dup));

  const auto chain = build_graph(6, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(chain == clique_chain(CliqueChainSpec({1, 2, 2, 1})));
}

TEST_CASE("build_graph rejects bad input") {
  CHECK(code_of([] { build_graph(3, {{0, 3}}); }) == ErrorCode::OutOfRangeNode);
  CHECK(code_of([] { build_graph(3, {{1, 1}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { build_graph(0, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("adjacency is sorted and symmetric") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const auto g = random_connected_graph(12, 0.3, rng);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      for (NodeId u : nb) CHECK(g.has_edge(u, v));
    }
  }
}

TEST_CASE("laplacian examples") {
  const auto p2 = path_graph(2);
  Eigen::Matrix2d expected;
  expected << 1, -1, -1, 1;
  CHECK(laplacian(p2).isApprox(expected));

  const auto L3 = laplacian(complete_graph(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(L3(i, j) == (i == j ? 2.0 : -1.0));

  const auto p3 = path_graph(3);
  const EdgeWeights w(p3, {2.0, 3.0}, 1.0, 3.0);
  const auto L = laplacian(p3, w);
  CHECK(L(0, 0) == 2.0);
  CHECK(L(1, 1) == 5.0);
  CHECK(L(2, 2) == 3.0);
  CHECK(L(0, 1) == -2.0);
  CHECK(L(1, 2) == -3.0);
  CHECK(L(0, 2) == 0.0);
}

TEST_CASE("laplacian rows sum to zero and the matrix is symmetric PSD") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> wd(0.5, 4.0);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_connected_graph(3 + t % 20, 0.25, rng);
    std::vector<double> values(g.num_edges());
    for (auto& x : values) x = wd(rng);
    const auto L = laplacian(g, EdgeWeights(g, values, 0.5, 4.0));
    CHECK((L * Eigen::VectorXd::Ones(L.rows())).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((L - L.transpose()).cwiseAbs().maxCoeff() == 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    CHECK(es.eigenvalues().minCoeff() > -1e-9);
  }
}

TEST_CASE("edge weights validation") {
  const auto p3 = path_graph(3);
  CHECK(code_of([&] { EdgeWeights(p3, {1.0}, 1.0, 2.0); }) == ErrorCode::MissingWeight);
  CHECK(code_of([&] { EdgeWeights(p3, {1.0, 5.0}, 1.0, 2.0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { EdgeWeights(p3, {1.0, 1.0}, 0.0, 2.0); }) == ErrorCode::NonpositiveRange);
  CHECK(code_of([&] { EdgeWeights(p3, {1.0, 1.0}, 2.0, 1.0); }) == ErrorCode::NonpositiveRange);
  const EdgeWeights w(p3, {1.5, 2.0}, 1.0, 2.0);
  CHECK(w.weight(1, 0) == 1.5);
  CHECK(code_of([&] { w.weight(0, 2); }) == ErrorCode::MissingWeight);
  const auto s = w.scaled(2.0);
  CHECK(s.weight(1, 2) == 4.0);
  CHECK(s.w_min() == 2.0);

  const auto k3 = complete_graph(3);
  CHECK(code_of([&] { laplacian(k3, w); }) == ErrorCode::MissingWeight);
}

TEST_CASE("bfs distances examples") {
  CHECK(bfs_distances(path_graph(4), 0) == std::vector<int>{0, 1, 2, 3});
  CHECK(bfs_distances(complete_graph(5), 2) == std::vector<int>{1, 1, 0, 1, 1});
  // Distances from the first leader of the two-leader example, in the order l1, l2, a, b, c.
  CHECK(bfs_distances(two_leader_example(), 0) == std::vector<int>{0, 2, 1, 2, 3});
  CHECK(code_of([] { bfs_distances(path_graph(3), 3); }) == ErrorCode::OutOfRangeNode);
  CHECK(code_of([] { bfs_distances(build_graph(3, {{0, 1}}), 0); }) == ErrorCode::Disconnected);
}

TEST_CASE("all-pairs distances are symmetric and agree with Floyd-Warshall") {
  std::mt19937_64 rng(5);
  for (int n : {5, 17, 30, 50}) {
    const auto g = random_connected_graph(n, 3.0 / n, rng);
    const auto d = all_pairs_distances(g);
    const auto oracle = floyd_distances(g);
    CHECK(d == oracle);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) CHECK(d[u][v] == d[v][u]);
  }
}

TEST_CASE("eccentricity and diameter") {
  for (int n = 2; n <= 9; ++n) CHECK(diameter(path_graph(n)) == n - 1);
  for (NodeId v = 0; v < 6; ++v) CHECK(eccentricity(complete_graph(6), v) == 1);
  CHECK(diameter(construct_mbar(4, 5).graph) == 5);
  CHECK(code_of([] { diameter(build_graph(3, {{0, 1}})); }) == ErrorCode::Disconnected);
}

TEST_CASE("diameter of every clique chain equals its length minus one") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> size(1, 4), len(2, 8);
  for (int t = 0; t < 100; ++t) {
    std::vector<int> sizes(len(rng));
    for (auto& s : sizes) s = size(rng);
    const CliqueChainSpec spec(sizes);
    CHECK(diameter(clique_chain(spec)) == spec.diameter());
  }
}
