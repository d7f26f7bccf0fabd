#include "netctl/leader_search.hpp"

#include "netctl/error.hpp"
#include "netctl/parallel.hpp"

#include <algorithm>
#include <numeric>

namespace netctl {

std::string_view to_string(Certificate c) noexcept {
  switch (c) {
    case Certificate::full_pmi: return "full_pmi";
    case Certificate::rank_oracle: return "rank_oracle";
    case Certificate::exhausted: return "exhausted";
  }
  return "unknown";
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    out = out * (n - r + i) / i;
    if (out > (std::uint64_t{1} << 52)) return out;
  }
  return out;
}

bool next_combination(std::vector<NodeId>& combo, std::size_t n) {
  const std::size_t k = combo.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (combo[pos] < n - k + pos) {
      ++combo[pos];
      for (std::size_t q = pos + 1; q < k; ++q) combo[q] = combo[q - 1] + 1;
      return true;
    }
  }
  return false;
}

// Visits k-subsets in lexicographic order in batches, testing each batch in
// parallel; returns the first passing subset in enumeration order.
template <typename Test>
LeaderSearchResult ascending_subset_search(const Graph& g, std::size_t k_start, std::size_t k_stop,
                                           const LeaderSearchOptions& options, Test&& test,
                                           Certificate found_as) {
  const std::size_t n = g.num_nodes();
  LeaderSearchResult result;
  const std::size_t batch_size = 256 * std::max(1u, options.threads);
  for (std::size_t k = k_start; k <= k_stop; ++k) {
    result.k_found = k;
    if (binomial(n, k) > options.max_subsets_per_k) return result;

    std::vector<NodeId> combo(k);
    std::iota(combo.begin(), combo.end(), NodeId{0});
    bool more = true;
    while (more) {
      std::vector<std::vector<NodeId>> batch;
      while (more && batch.size() < batch_size) {
        if (result.subsets_examined + batch.size() >= options.budget) {
          more = false;
          break;
        }
        batch.push_back(combo);
        more = next_combination(combo, n);
      }
      std::vector<char> pass(batch.size(), 0);
      parallel_for(batch.size(), options.threads, [&](std::size_t i) {
        pass[i] = test(LeaderSet(batch[i], n)) ? 1 : 0;
      });
      for (std::size_t i = 0; i < batch.size(); ++i) {
        ++result.subsets_examined;
        if (pass[i]) {
          result.witness_leaders.emplace(batch[i], n);
          result.certificate = found_as;
          return result;
        }
      }
      if (result.subsets_examined >= options.budget) return result;
    }
  }
  return result;
}

std::vector<int> eccentricities(const Graph& g) {
  std::vector<int> ecc(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) ecc[v] = eccentricity(g, v);
  return ecc;
}

bool full_pmi_with(const Graph& g, const LeaderSet& leaders, const std::vector<int>& ecc,
                   std::uint64_t pmi_budget) {
  long reach = 1;
  for (NodeId l : leaders) reach += ecc[l];
  if (reach < static_cast<long>(g.num_nodes())) return false;
  return longest_pmi(dl_matrix(g, leaders), PmiMode::exact, pmi_budget).length() == g.num_nodes();
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "leader search needs a connected graph");
}

LeaderSearchResult single_node_result(const Graph& g) {
  LeaderSearchResult r;
  r.k_found = 1;
  r.witness_leaders.emplace(std::vector<NodeId>{0}, g.num_nodes());
  r.certificate = Certificate::full_pmi;
  r.subsets_examined = 1;
  return r;
}

}  // namespace

bool has_full_pmi(const Graph& g, const LeaderSet& leaders, std::uint64_t pmi_budget) {
  require_connected(g);
  return full_pmi_with(g, leaders, eccentricities(g), pmi_budget);
}

LeaderSearchResult min_leaders_full_pmi(const Graph& g, const LeaderSearchOptions& options) {
  require_connected(g);
  const std::size_t n = g.num_nodes();
  if (n == 1) return single_node_result(g);
  const auto ecc = eccentricities(g);
  const int D = *std::max_element(ecc.begin(), ecc.end());
  const auto k_start = static_cast<std::size_t>(pmi_leader_lower_bound(static_cast<int>(n), D));
  try {
    return ascending_subset_search(
        g, k_start, n - 1, options,
        [&](const LeaderSet& leaders) { return full_pmi_with(g, leaders, ecc, options.pmi_budget); },
        Certificate::full_pmi);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded) throw;
    LeaderSearchResult r;
    r.k_found = k_start;
    return r;
  }
}

LeaderSearchResult min_leaders_ssc_estimate(const Graph& g, const LeaderSearchOptions& options) {
  require_connected(g);
  const std::size_t n = g.num_nodes();
  if (n == 1) return single_node_result(g);
  const auto ecc = eccentricities(g);
  // Parallelism lives at the subset level; each oracle call runs single-threaded.
  auto result = ascending_subset_search(
      g, 1, n - 1, options,
      [&](const LeaderSet& leaders) {
        if (!maximal_lieep(g, leaders).all_singletons()) return false;
        const auto rank = ssc_rank_oracle(g, leaders, options.trials, options.w_min, options.w_max,
                                          options.seed, 1);
        return rank.min_rank == n;
      },
      Certificate::rank_oracle);
  if (result.witness_leaders && full_pmi_with(g, *result.witness_leaders, ecc, options.pmi_budget))
    result.certificate = Certificate::full_pmi;
  return result;
}

std::pair<int, int> clique_chain_leader_bounds(const CliqueChainSpec& spec) {
  const int D = spec.diameter();
  if (D <= 2) throw Error(ErrorCode::DiameterTooSmall, "clique chain bounds need D > 2");
  const int N = static_cast<int>(spec.num_nodes());
  return {N - (D + 1), N - D};
}

int pmi_leader_lower_bound(int N, int D) {
  if (N < 2 || D < 1) throw Error(ErrorCode::InvalidArgument, "need N >= 2, D >= 1");
  return (N - 1 + D - 1) / D;
}

EccentricityCheck eccentricity_bound_check(const Graph& g, const LeaderSet& leaders) {
  require_connected(g);
  EccentricityCheck out;
  long reach = 1;
  for (NodeId l : leaders) reach += eccentricity(g, l);
  out.slack = reach - static_cast<long>(g.num_nodes());
  out.full_pmi = longest_pmi(dl_matrix(g, leaders)).length() == g.num_nodes();
  out.consistent = !(out.full_pmi && out.slack < 0);
  return out;
}

LeaderSet clique_chain_pmi_leaders(const CliqueChainSpec& spec) {
  const std::size_t n = spec.num_nodes();
  std::vector<bool> saved(n, false);
  for (std::size_t c = 1; c < spec.sizes().size(); ++c) saved[spec.clique_offset(c)] = true;
  std::vector<NodeId> leaders;
  for (NodeId v = 0; v < n; ++v)
    if (!saved[v]) leaders.push_back(v);
  return LeaderSet(std::move(leaders), n);
}

}  // namespace netctl
