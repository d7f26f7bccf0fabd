#include "netctl/clique_chain.hpp"

#include "netctl/error.hpp"
#include "netctl/kirchhoff.hpp"
#include "netctl/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace netctl {

CliqueChainSpec::CliqueChainSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.size() < 2) throw Error(ErrorCode::InvalidArgument, "a clique chain needs at least two cliques");
  for (int s : sizes_) {
    if (s < 1) throw Error(ErrorCode::EmptyClique, "clique sizes must be positive");
  }
}

std::size_t CliqueChainSpec::num_nodes() const noexcept {
  return static_cast<std::size_t>(std::accumulate(sizes_.begin(), sizes_.end(), 0));
}

NodeId CliqueChainSpec::clique_offset(std::size_t c) const {
  return static_cast<NodeId>(std::accumulate(sizes_.begin(), sizes_.begin() + static_cast<std::ptrdiff_t>(c), 0));
}

std::string CliqueChainSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) out << (i ? " " : "") << sizes_[i];
  return out.str();
}

Graph clique_chain(const CliqueChainSpec& spec) {
  const auto& sizes = spec.sizes();
  std::vector<Edge> edges;
  NodeId offset = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const NodeId end = offset + static_cast<NodeId>(sizes[c]);
    for (NodeId u = offset; u < end; ++u) {
      for (NodeId v = u + 1; v < end; ++v) edges.emplace_back(u, v);
      if (c + 1 < sizes.size()) {
        for (NodeId v = end; v < end + static_cast<NodeId>(sizes[c + 1]); ++v) edges.emplace_back(u, v);
      }
    }
    offset = end;
  }
  return build_graph(spec.num_nodes(), edges);
}

std::uint64_t clique_chain_candidate_count(int N, int D) {
  if (D < 2 || N < D + 1) return 0;
  // C(N-3, D-2), saturating well above the guard.
  const std::uint64_t n = static_cast<std::uint64_t>(N - 3);
  const std::uint64_t r = static_cast<std::uint64_t>(D - 2);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > 100 * kMaxCliqueChainCandidates) return result;
  }
  return result;
}

namespace {

// Visits interior parts (n_2..n_D) summing to `total` in lexicographic order.
template <typename Fn>
void for_each_composition(int total, int parts, std::vector<int>& prefix, Fn&& fn) {
  if (parts == 1) {
    prefix.push_back(total);
    fn(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 1; first <= total - (parts - 1); ++first) {
    prefix.push_back(first);
    for_each_composition(total - first, parts - 1, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

CliqueChainSearchResult optimal_clique_chain_search(int N, int D, unsigned threads) {
  if (D < 2 || N < D + 1)
    throw Error(ErrorCode::InfeasibleNDCombination,
                "need N >= D + 1 >= 3, got N=" + std::to_string(N) + " D=" + std::to_string(D));
  const std::uint64_t count = clique_chain_candidate_count(N, D);
  if (count > kMaxCliqueChainCandidates)
    throw Error(ErrorCode::InfeasibleNDCombination,
                std::to_string(count) + " compositions exceed the search guard");

  // Flat storage: candidate i occupies sizes [i*stride, (i+1)*stride).
  const std::size_t stride = static_cast<std::size_t>(D) + 1;
  std::vector<int> flat;
  std::vector<int> prefix;
  for_each_composition(N - 2, D - 1, prefix, [&](const std::vector<int>& interior) {
    if (std::lexicographical_compare(interior.rbegin(), interior.rend(), interior.begin(), interior.end()))
      return;  // its reversal is evaluated instead
    flat.push_back(1);
    flat.insert(flat.end(), interior.begin(), interior.end());
    flat.push_back(1);
  });
  const std::size_t num_candidates = flat.size() / stride;
  auto sizes_of = [&](std::size_t i) {
    return std::vector<int>(flat.begin() + static_cast<std::ptrdiff_t>(i * stride),
                            flat.begin() + static_cast<std::ptrdiff_t>((i + 1) * stride));
  };

  // Values within 1e-12 relative count as ties and go to the earlier (lexicographically
  // smaller) candidate.
  struct Scored {
    double kf = std::numeric_limits<double>::infinity();
    std::size_t index = 0;
  };
  auto better = [](const Scored& a, const Scored& b) {
    const double tie = 1e-12 * std::max(std::abs(a.kf), std::abs(b.kf));
    if (a.kf < b.kf - tie) return true;
    if (b.kf < a.kf - tie) return false;
    return a.index < b.index;
  };

  const std::size_t chunks =
      std::max<std::size_t>(1, std::min<std::size_t>(num_candidates, 64 * std::max(1u, threads)));
  std::vector<Scored> best(chunks);
  parallel_for(chunks, threads, [&](std::size_t chunk) {
    const std::size_t begin = num_candidates * chunk / chunks;
    const std::size_t end = num_candidates * (chunk + 1) / chunks;
    for (std::size_t i = begin; i < end; ++i) {
      const Scored s{kirchhoff_eigen(clique_chain(CliqueChainSpec(sizes_of(i)))).kf, i};
      if (i == begin || better(s, best[chunk])) best[chunk] = s;
    }
  });
  Scored winner = best.front();
  for (const auto& b : best) {
    if (std::isfinite(b.kf) && (!std::isfinite(winner.kf) || better(b, winner))) winner = b;
  }
  return {CliqueChainSpec(sizes_of(winner.index)), winner.kf, static_cast<std::uint64_t>(num_candidates)};
}

}  // namespace netctl
