#pragma once

#include "netctl/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace netctl {

/// Composition (n_1, ..., n_{D+1}) describing the clique chain G_D(n_1, ..., n_{D+1}).
class CliqueChainSpec {
public:
  /// Throws EmptyClique for a zero size and InvalidArgument for fewer than two cliques.
  explicit CliqueChainSpec(std::vector<int> sizes);

  const std::vector<int>& sizes() const noexcept { return sizes_; }
  std::size_t num_nodes() const noexcept;
  int diameter() const noexcept { return static_cast<int>(sizes_.size()) - 1; }

  /// First node id of clique c (0-based); nodes of clique c are consecutive.
  NodeId clique_offset(std::size_t c) const;

  /// Space-joined sizes, e.g. "1 2 3 1".
  std::string to_string() const;

  friend auto operator<=>(const CliqueChainSpec&, const CliqueChainSpec&) = default;

private:
  std::vector<int> sizes_;
};

/// Cliques laid out consecutively (clique 0 first); consecutive cliques fully joined.
Graph clique_chain(const CliqueChainSpec& spec);

struct CliqueChainSearchResult {
  CliqueChainSpec spec;
  double kf = 0.0;
  std::uint64_t candidates = 0;  // compositions whose K_f was evaluated
};

/// Largest candidate count the exhaustive search accepts.
inline constexpr std::uint64_t kMaxCliqueChainCandidates = 5'000'000;

/// Number of compositions (1, n_2, ..., n_D, 1) of N: C(N-3, D-2).
std::uint64_t clique_chain_candidate_count(int N, int D);

/// Exhaustive minimum-K_f clique chain with N nodes and diameter D among
/// (1, n_2, ..., n_D, 1), every candidate scored with kirchhoff_eigen on the
/// assembled chain. Ties go to the lexicographically smallest composition.
/// A composition and its reversal have the same K_f, so only the
/// lexicographically smaller of each pair is evaluated.
/// Throws InfeasibleNDCombination when N < D + 1, D < 2, or the count exceeds the guard.
CliqueChainSearchResult optimal_clique_chain_search(int N, int D, unsigned threads = 1);

}  // namespace netctl
