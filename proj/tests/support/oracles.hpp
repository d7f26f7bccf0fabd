#pragma once

#include "netctl/graph.hpp"

#include <cstdint>
#include <vector>

// Slow, independent reference implementations used only to check the library.
namespace testing_support {

using netctl::Graph;

/// K_f = N tr(L^+) with L^+ = (L + J/N)^{-1} - J/N.
double kf_pseudoinverse(const Graph& g, const std::vector<double>& weights);
double kf_pseudoinverse(const Graph& g);

/// Hop distances by Floyd-Warshall.
std::vector<std::vector<int>> floyd_distances(const Graph& g);

/// Cell count of the coarsest LIEEP found by scanning every set partition.
std::size_t brute_force_lieep_cells(const Graph& g, const std::vector<std::size_t>& leaders);

/// Longest PMI length by depth-first search over node sequences and witnesses,
/// re-checking the definition for every prefix.
std::size_t brute_force_longest_pmi(const std::vector<std::vector<int>>& dl);

/// Rank over GF(2^61 - 1) of the controllability matrix for integer edge weights.
std::size_t modular_controllability_rank(const Graph& g, const std::vector<std::int64_t>& weights,
                                         const std::vector<std::size_t>& leaders);

/// Sum over unordered pairs of hop distances.
long distance_sum(const Graph& g);

}  // namespace testing_support
