#pragma once

#include "netctl/clique_chain.hpp"
#include "netctl/graph.hpp"
#include "netctl/ssc.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace netctl {

enum class Certificate {
  full_pmi,     // some ordering of the leaders' distance vectors is a full PMI sequence
  rank_oracle,  // all-singleton maximal LIEEP and full rank on every sampled weighting
  exhausted,    // search stopped by a guard or budget before finding a witness
};

std::string_view to_string(Certificate c) noexcept;

struct LeaderSearchResult {
  /// Leaders found, or for `exhausted` the smallest k not yet ruled out.
  std::size_t k_found = 0;
  std::optional<LeaderSet> witness_leaders;
  Certificate certificate = Certificate::exhausted;
  std::uint64_t subsets_examined = 0;
};

struct LeaderSearchOptions {
  /// Maximum number of leader subsets examined over the whole search.
  std::uint64_t budget = 50'000'000;
  /// Subsets per k above which that k is not enumerated.
  std::uint64_t max_subsets_per_k = 1'000'000;
  /// Node-expansion cap handed to each exact PMI search.
  std::uint64_t pmi_budget = 10'000'000;
  int trials = 50;
  double w_min = 1.0;
  double w_max = 10.0;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// True iff the leaders admit a full PMI sequence. Rejects early when
/// 1 + sum of leader eccentricities < N.
bool has_full_pmi(const Graph& g, const LeaderSet& leaders, std::uint64_t pmi_budget = 10'000'000);

/// Smallest k for which some k-subset yields a full PMI sequence. k starts at
/// ceil((N-1)/D); subsets within a k are visited in lexicographic order and the
/// first witness wins. Throws Disconnected.
LeaderSearchResult min_leaders_full_pmi(const Graph& g, const LeaderSearchOptions& options = {});

/// Smallest k for which some k-subset has an all-singleton maximal LIEEP and full
/// controllability rank on every sampled weighting. The certificate is full_pmi when
/// the winning subset also has a full PMI sequence, otherwise rank_oracle (an estimate).
LeaderSearchResult min_leaders_ssc_estimate(const Graph& g, const LeaderSearchOptions& options = {});

/// (N - (D+1), N - D): leaders needed for strong structural controllability of a
/// clique chain. Throws DiameterTooSmall unless D > 2.
std::pair<int, int> clique_chain_leader_bounds(const CliqueChainSpec& spec);

/// ceil((N-1)/D), the fewest leaders that can give a full PMI sequence.
int pmi_leader_lower_bound(int N, int D);

struct EccentricityCheck {
  /// 1 + sum_i ecc(l_i) - N.
  long slack = 0;
  bool full_pmi = false;
  /// False only if a full PMI sequence exists while slack < 0.
  bool consistent = true;
};

EccentricityCheck eccentricity_bound_check(const Graph& g, const LeaderSet& leaders);

/// One node of the first clique plus every node except one node from each later
/// clique (the lowest id), N - D leaders in total. These leaders admit a full PMI sequence.
LeaderSet clique_chain_pmi_leaders(const CliqueChainSpec& spec);

}  // namespace netctl
