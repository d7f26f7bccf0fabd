#include <doctest.h>

#include "netctl/clique_chain.hpp"
#include "netctl/error.hpp"
#include "netctl/kirchhoff.hpp"

#include <cmath>
#include <functional>
#include <optional>

using namespace netctl;

namespace {

// Plain enumeration of every composition (1, n_2, ..., n_D, 1), reversals included.
CliqueChainSearchResult brute_force_search(int N, int D) {
  std::vector<int> sizes(D + 1, 1);
  std::optional<CliqueChainSearchResult> best;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == D) {
      if (remaining != 0) return;
      const CliqueChainSpec spec(sizes);
      const double kf = kirchhoff_eigen(clique_chain(spec)).kf;
      if (!best || kf < best->kf - 1e-9) best = CliqueChainSearchResult{spec, kf, 0};
      return;
    }
    for (int s = 1; s <= remaining - (D - 1 - pos); ++s) {
      sizes[pos] = s;
      rec(pos + 1, remaining - s);
    }
  };
  rec(1, N - 2);
  return *best;
}

}  // namespace

TEST_CASE("search examples") {
  const auto a = optimal_clique_chain_search(7, 3);
  CHECK(a.spec == CliqueChainSpec({1, 2, 3, 1}));
  CHECK(a.kf == doctest::Approx(10.5));
  const auto b = optimal_clique_chain_search(16, 5);
  CHECK(b.spec == CliqueChainSpec({1, 3, 4, 4, 3, 1}));
  CHECK(b.kf == doctest::Approx(38.73).epsilon(1e-4));
  for (int D = 2; D <= 8; ++D) {
    const int N = D + 1;
    const auto p = optimal_clique_chain_search(N, D);
    CHECK(p.spec == CliqueChainSpec(std::vector<int>(N, 1)));
    CHECK(p.kf == doctest::Approx((std::pow(N, 3) - N) / 6.0));
  }
}

TEST_CASE("search agrees with plain enumeration") {
  for (int D = 2; D <= 5; ++D)
    for (int N = D + 1; N <= D + 9; ++N) {
      CAPTURE(N);
      CAPTURE(D);
      const auto fast = optimal_clique_chain_search(N, D);
      const auto slow = brute_force_search(N, D);
      CHECK(fast.kf == doctest::Approx(slow.kf).epsilon(1e-10));
      // Ties resolve to the lexicographically smallest composition, as in plain enumeration.
      CHECK(fast.spec == slow.spec);
    }
}

TEST_CASE("reversal leaves the Kirchhoff index unchanged") {
  for (std::vector<int> s : {std::vector<int>{1, 2, 3, 1}, {1, 3, 6, 6, 4, 1}, {1, 2, 4, 4, 4, 3, 1}}) {
    std::vector<int> r(s.rbegin(), s.rend());
    CHECK(kirchhoff_eigen(clique_chain(CliqueChainSpec(s))).kf ==
          doctest::Approx(kirchhoff_eigen(clique_chain(CliqueChainSpec(r))).kf).epsilon(1e-12));
  }
}

TEST_CASE("search is independent of the thread count") {
  const auto one = optimal_clique_chain_search(25, 5, 1);
  const auto four = optimal_clique_chain_search(25, 5, 4);
  CHECK(one.spec == four.spec);
  CHECK(one.kf == four.kf);
}

TEST_CASE("candidate counting and guards") {
  CHECK(clique_chain_candidate_count(50, 7) == 1533939);
  CHECK(clique_chain_candidate_count(7, 3) == 4);
  for (auto [N, D] : {std::pair{3, 3}, {5, 1}, {200, 12}}) {
    try {
      optimal_clique_chain_search(N, D);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InfeasibleNDCombination);
    }
  }
}
