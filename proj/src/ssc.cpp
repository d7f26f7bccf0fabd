#include "netctl/ssc.hpp"

#include "netctl/error.hpp"
#include "netctl/parallel.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <unordered_map>

namespace netctl {

// ---- leaders and distance-to-leader vectors ------------------------------------

LeaderSet::LeaderSet(std::vector<NodeId> leaders, std::size_t num_nodes)
    : leaders_(std::move(leaders)) {
  if (leaders_.empty()) throw Error(ErrorCode::InvalidArgument, "leader set is empty");
  for (NodeId l : leaders_) {
    if (l >= num_nodes) throw Error(ErrorCode::OutOfRangeNode, "leader " + std::to_string(l));
  }
  auto sorted = leaders_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw Error(ErrorCode::InvalidArgument, "leaders must be distinct");
}

bool LeaderSet::contains(NodeId v) const {
  return std::find(leaders_.begin(), leaders_.end(), v) != leaders_.end();
}

DLMatrix dl_matrix(const Graph& g, const LeaderSet& leaders) {
  DLMatrix dl;
  dl.leader_order = leaders.nodes();
  dl.rows.assign(g.num_nodes(), std::vector<int>(leaders.size(), 0));
  for (std::size_t j = 0; j < leaders.size(); ++j) {
    const auto dist = bfs_distances(g, leaders[j]);
    for (NodeId v = 0; v < g.num_nodes(); ++v) dl.rows[v][j] = dist[v];
  }
  return dl;
}

// ---- PMI sequences --------------------------------------------------------------

bool validate_pmi(const PMISequence& seq, const DLMatrix& dl) {
  if (seq.order.size() != seq.witness.size())
    throw Error(ErrorCode::IndexMismatch, "order and witness lengths differ");
  for (std::size_t i = 0; i < seq.order.size(); ++i) {
    if (seq.order[i] >= dl.num_rows())
      throw Error(ErrorCode::IndexMismatch, "row " + std::to_string(seq.order[i]));
    if (seq.witness[i] >= dl.num_leaders())
      throw Error(ErrorCode::IndexMismatch, "witness " + std::to_string(seq.witness[i]));
  }
  for (std::size_t i = 0; i < seq.order.size(); ++i) {
    const std::size_t a = seq.witness[i];
    const int threshold = dl.at(seq.order[i], a);
    for (std::size_t j = i + 1; j < seq.order.size(); ++j) {
      if (!(threshold < dl.at(seq.order[j], a))) return false;
    }
  }
  return true;
}

namespace {

bool dominates(const std::vector<int>& row, const std::vector<int>& threshold) {
  for (std::size_t a = 0; a < row.size(); ++a) {
    if (row[a] <= threshold[a]) return false;
  }
  return true;
}

// A node may be appended to a prefix iff its vector exceeds, coordinatewise, the
// largest witnessed value per leader so far. Appending with witness a raises
// threshold[a] to the node's a-th entry, so the threshold vector alone is the state.
class ExactPmiSolver {
public:
  ExactPmiSolver(const DLMatrix& dl, std::uint64_t budget) : dl_(dl), budget_(budget) {
    int max_value = 0;
    for (const auto& row : dl.rows)
      for (int x : row) max_value = std::max(max_value, x);
    wide_keys_ = max_value >= 254;
  }

  PMISequence run() {
    const std::size_t k = dl_.num_leaders();
    std::vector<int> threshold(k, -1);
    solve(threshold);

    PMISequence seq;
    for (;;) {
      const auto it = memo_.find(key(threshold));
      if (it == memo_.end() || it->second.length == 0) break;
      const auto [length, a, value] = it->second;
      NodeId chosen = dl_.num_rows();
      for (NodeId v = 0; v < dl_.num_rows(); ++v) {
        if (dl_.rows[v][a] == value && dominates(dl_.rows[v], threshold)) {
          chosen = v;
          break;
        }
      }
      seq.order.push_back(chosen);
      seq.witness.push_back(a);
      threshold[a] = value;
    }
    return seq;
  }

private:
  struct Entry {
    int length = 0;
    std::size_t leader = 0;
    int value = 0;
  };

  std::string key(const std::vector<int>& threshold) const {
    std::string out;
    out.reserve(threshold.size() * (wide_keys_ ? 2 : 1));
    for (int t : threshold) {
      const unsigned u = static_cast<unsigned>(t + 1);
      out.push_back(static_cast<char>(u & 0xFF));
      if (wide_keys_) out.push_back(static_cast<char>((u >> 8) & 0xFF));
    }
    return out;
  }

  int solve(std::vector<int>& threshold) {
    auto k_str = key(threshold);
    if (auto it = memo_.find(k_str); it != memo_.end()) return it->second.length;
    if (++expansions_ > budget_)
      throw Error(ErrorCode::BudgetExceeded,
                  "exact PMI search exceeded " + std::to_string(budget_) + " expansions");

    const std::size_t k = dl_.num_leaders();
    std::vector<std::vector<int>> values(k);
    std::size_t eligible = 0;
    for (const auto& row : dl_.rows) {
      if (!dominates(row, threshold)) continue;
      ++eligible;
      for (std::size_t a = 0; a < k; ++a) values[a].push_back(row[a]);
    }
    Entry best;
    if (eligible > 0) {
      long long step_bound = 0;
      for (std::size_t a = 0; a < k; ++a) {
        auto& col = values[a];
        std::sort(col.begin(), col.end());
        col.erase(std::unique(col.begin(), col.end()), col.end());
        step_bound += col.back() - threshold[a];
      }
      const int upper = static_cast<int>(std::min<long long>(step_bound, static_cast<long long>(eligible)));
      for (std::size_t a = 0; a < k && best.length < upper; ++a) {
        for (int s : values[a]) {
          const int saved = threshold[a];
          threshold[a] = s;
          const int length = 1 + solve(threshold);
          threshold[a] = saved;
          if (length > best.length) best = {length, a, s};
          if (best.length >= upper) break;
        }
      }
    }
    memo_.emplace(std::move(k_str), best);
    return best.length;
  }

  const DLMatrix& dl_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  bool wide_keys_ = false;
  std::unordered_map<std::string, Entry> memo_;
};

PMISequence greedy_pmi(const DLMatrix& dl) {
  const std::size_t k = dl.num_leaders();
  std::vector<int> threshold(k, -1);
  PMISequence seq;
  for (;;) {
    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < dl.num_rows(); ++v) {
      if (dominates(dl.rows[v], threshold)) candidates.push_back(v);
    }
    if (candidates.empty()) break;
    std::stable_sort(candidates.begin(), candidates.end(),
                     [&](NodeId a, NodeId b) { return dl.rows[a] < dl.rows[b]; });

    // Witness a keeps candidate u eligible iff S[u][a] > S[v][a].
    auto kept = [&](NodeId v, std::size_t a) {
      std::size_t count = 0;
      for (NodeId u : candidates)
        if (u != v && dl.rows[u][a] > dl.rows[v][a]) ++count;
      return count;
    };

    NodeId pick = candidates.front();
    std::size_t witness = 0;
    bool lossless = false;
    for (NodeId v : candidates) {
      for (std::size_t a = 0; a < k && !lossless; ++a) {
        if (kept(v, a) + 1 == candidates.size()) {
          pick = v;
          witness = a;
          lossless = true;
        }
      }
      if (lossless) break;
    }
    if (!lossless) {
      std::size_t best = 0;
      for (std::size_t a = 0; a < k; ++a) {
        const std::size_t c = kept(pick, a);
        if (a == 0 || c > best) {
          best = c;
          witness = a;
        }
      }
    }
    seq.order.push_back(pick);
    seq.witness.push_back(witness);
    threshold[witness] = dl.rows[pick][witness];
  }
  return seq;
}

}  // namespace

PMISequence longest_pmi(const DLMatrix& dl, PmiMode mode, std::uint64_t budget) {
  for (const auto& row : dl.rows) {
    if (row.size() != dl.num_leaders())
      throw Error(ErrorCode::IndexMismatch, "ragged distance-to-leader matrix");
  }
  if (dl.num_leaders() == 0) throw Error(ErrorCode::InvalidArgument, "no leaders");
  if (mode == PmiMode::greedy) return greedy_pmi(dl);
  return ExactPmiSolver(dl, budget).run();
}

// ---- equitable partitions -------------------------------------------------------

bool Partition::all_singletons() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.size() == 1; });
}

namespace {

std::vector<std::size_t> cell_index(std::size_t n, const Partition& p) {
  std::vector<std::size_t> cell(n, p.cells.size());
  std::size_t covered = 0;
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    for (NodeId v : p.cells[c]) {
      if (v >= n || cell[v] != p.cells.size())
        throw Error(ErrorCode::IndexMismatch, "partition cells overlap or leave the node set");
      cell[v] = c;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorCode::IndexMismatch, "partition does not cover every node");
  return cell;
}

Partition from_labels(const std::vector<std::size_t>& label) {
  // Cells numbered by smallest member, members ascending.
  std::map<std::size_t, std::size_t> first_seen;
  Partition p;
  for (NodeId v = 0; v < label.size(); ++v) {
    auto [it, inserted] = first_seen.emplace(label[v], p.cells.size());
    if (inserted) p.cells.emplace_back();
    p.cells[it->second].push_back(v);
  }
  return p;
}

}  // namespace

bool is_lieep(const Graph& g, const LeaderSet& leaders, const Partition& p) {
  const auto cell = cell_index(g.num_nodes(), p);
  for (NodeId l : leaders) {
    if (p.cells[cell[l]].size() != 1) return false;
  }
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    std::vector<std::size_t> reference;
    for (std::size_t idx = 0; idx < p.cells[c].size(); ++idx) {
      std::vector<std::size_t> degree(p.cells.size(), 0);
      for (NodeId w : g.neighbors(p.cells[c][idx])) ++degree[cell[w]];
      degree[c] = 0;
      if (idx == 0)
        reference = std::move(degree);
      else if (degree != reference)
        return false;
    }
  }
  return true;
}

Partition refine_external_equitable(const Graph& g, const Partition& start) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> cell = cell_index(n, from_labels(cell_index(n, start)));
  std::size_t num_cells = start.cells.size();
  for (;;) {
    // Signature: own cell followed by sorted (other cell, degree) pairs.
    std::vector<std::vector<std::size_t>> signature(n);
    for (NodeId v = 0; v < n; ++v) {
      std::map<std::size_t, std::size_t> counts;
      for (NodeId w : g.neighbors(v)) {
        if (cell[w] != cell[v]) ++counts[cell[w]];
      }
      auto& sig = signature[v];
      sig.push_back(cell[v]);
      for (const auto& [c, d] : counts) {
        sig.push_back(c);
        sig.push_back(d);
      }
    }
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> label(n);
    for (NodeId v = 0; v < n; ++v) label[v] = ids.emplace(signature[v], ids.size()).first->second;
    const Partition next = from_labels(label);
    if (next.num_cells() == num_cells) return next;
    num_cells = next.num_cells();
    cell = cell_index(n, next);
  }
}

Partition maximal_lieep(const Graph& g, const LeaderSet& leaders) {
  std::vector<std::size_t> label(g.num_nodes(), 0);
  for (std::size_t j = 0; j < leaders.size(); ++j) label[leaders[j]] = j + 1;
  return refine_external_equitable(g, from_labels(label));
}

// ---- controllability rank -------------------------------------------------------

SquareMatrix controllability_matrix(const SquareMatrix& L, const LeaderSet& leaders) {
  const Eigen::Index n = L.rows();
  const auto k = static_cast<Eigen::Index>(leaders.size());
  SquareMatrix gamma(n, n * k);
  SquareMatrix block = SquareMatrix::Zero(n, k);
  for (Eigen::Index j = 0; j < k; ++j) block(static_cast<Eigen::Index>(leaders[static_cast<std::size_t>(j)]), j) = 1.0;
  for (Eigen::Index m = 0; m < n; ++m) {
    gamma.middleCols(m * k, k) = block;
    block = (-L * block).eval();
  }
  return gamma;
}

std::size_t numerical_rank(const SquareMatrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<SquareMatrix> svd(m);
  const auto& sigma = svd.singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  const double tol = 1e-9 * sigma(0) * static_cast<double>(m.rows());
  return static_cast<std::size_t>((sigma.array() > tol).count());
}

std::size_t controllable_dimension(const SquareMatrix& L, const LeaderSet& leaders) {
  const Eigen::Index n = L.rows();
  const auto k = static_cast<Eigen::Index>(leaders.size());
  const double scale = std::max(L.cwiseAbs().rowwise().sum().maxCoeff(), 1e-300);
  const double tol = 1e-9 * static_cast<double>(n) * scale;

  SquareMatrix basis = SquareMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < k; ++j) basis(static_cast<Eigen::Index>(leaders[static_cast<std::size_t>(j)]), j) = 1.0;
  Eigen::Index rank = k;
  Eigen::Index newest = 0;
  Eigen::Index newest_count = k;
  while (rank < n && newest_count > 0) {
    SquareMatrix residual = L * basis.middleCols(newest, newest_count);
    const auto known = basis.leftCols(rank);
    for (int pass = 0; pass < 2; ++pass) residual -= known * (known.transpose() * residual);

    Eigen::JacobiSVD<SquareMatrix> svd(residual, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    Eigen::Index fresh = 0;
    while (fresh < sigma.size() && sigma(fresh) > tol) ++fresh;
    fresh = std::min(fresh, n - rank);
    if (fresh == 0) break;
    basis.middleCols(rank, fresh) = svd.matrixU().leftCols(fresh);
    newest = rank;
    newest_count = fresh;
    rank += fresh;
  }
  return static_cast<std::size_t>(rank);
}

RankOracleResult ssc_rank_oracle(const Graph& g, const LeaderSet& leaders, int trials,
                                 double w_min, double w_max, std::uint64_t seed,
                                 unsigned threads) {
  if (!(w_min > 0.0) || !(w_max >= w_min))
    throw Error(ErrorCode::NonpositiveRange, "need 0 < w_min <= w_max");
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  for (NodeId l : leaders)
    if (l >= g.num_nodes()) throw Error(ErrorCode::OutOfRangeNode, "leader " + std::to_string(l));

  const auto draws = static_cast<std::size_t>(trials) + 1;
  std::vector<std::size_t> ranks(draws, 0);
  parallel_for(draws, threads, [&](std::size_t t) {
    std::vector<double> weights(g.num_edges(), w_min);
    if (t < static_cast<std::size_t>(trials)) {
      std::mt19937_64 rng(derive_seed(seed, t));
      std::uniform_real_distribution<double> dist(w_min, w_max);
      for (double& w : weights) w = std::min(w_max, dist(rng));
    }
    const EdgeWeights ew(g, std::move(weights), w_min, w_max);
    ranks[t] = controllable_dimension(laplacian(g, ew), leaders);
  });

  RankOracleResult result;
  result.draws = draws;
  result.min_rank = *std::min_element(ranks.begin(), ranks.end());
  result.max_rank = *std::max_element(ranks.begin(), ranks.end());
  return result;
}

}  // namespace netctl
