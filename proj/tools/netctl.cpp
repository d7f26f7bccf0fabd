// Command-line front end for the netctl library.
#include "netctl/clique_chain.hpp"
#include "netctl/consensus.hpp"
#include "netctl/error.hpp"
#include "netctl/graph_io.hpp"
#include "netctl/kirchhoff.hpp"
#include "netctl/leader_search.hpp"
#include "netctl/mgraph.hpp"
#include "netctl/report.hpp"
#include "netctl/ssc.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <map>
#include <thread>

using namespace netctl;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kInvalidInput = 2, kBudget = 3, kDisconnected = 4 };

struct Globals {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget = 50'000'000;
  std::string format = "csv";
};

// A flat record printed either as a two-line CSV or as a JSON object.
void emit_record(const Globals& g, const std::vector<std::pair<std::string, json>>& fields) {
  if (g.format == "json") {
    json j = json::object();
    for (const auto& [k, v] : fields) j[k] = v;
    std::cout << j.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < fields.size(); ++i) std::cout << (i ? "," : "") << fields[i].first;
  std::cout << '\n';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& v = fields[i].second;
    std::cout << (i ? "," : "");
    if (v.is_string())
      std::cout << '"' << v.get<std::string>() << '"';
    else if (v.is_array()) {
      // Flat arrays are space-joined; nested ones separate groups with '|'.
      std::cout << '"';
      for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_array()) {
          std::cout << (a ? "|" : "");
          for (std::size_t b = 0; b < v[a].size(); ++b) std::cout << (b ? " " : "") << v[a][b].dump();
        } else {
          std::cout << (a ? " " : "") << v[a].dump();
        }
      }
      std::cout << '"';
    } else if (v.is_number_float()) {
      std::cout << std::setprecision(17) << v.get<double>();
    } else {
      std::cout << v.dump();
    }
  }
  std::cout << '\n';
}

template <typename Rows>
void emit_rows(const Globals& g, const Rows& rows) {
  if (g.format == "json")
    std::cout << to_json(std::span(rows)).dump(2) << '\n';
  else
    write_csv(std::cout, std::span(rows));
}

LeaderSet leaders_for(const GraphDocument& doc, const std::vector<NodeId>& override_leaders) {
  const auto& chosen = override_leaders.empty() ? doc.leaders : override_leaders;
  if (chosen.empty()) throw Error(ErrorCode::InvalidArgument, "no leaders: pass --leaders or store them in the graph file");
  return LeaderSet(chosen, doc.graph.num_nodes());
}

void write_document(const GraphDocument& doc, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << to_json(doc).dump() << '\n';
  else
    save_graph_file(out_path, doc);
}

GraphDocument document_of(const MGraph& m) {
  return GraphDocument{m.graph, m.leaders.nodes(), std::nullopt, m.labels()};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BudgetExceeded: return kBudget;
    case ErrorCode::Disconnected: return kDisconnected;
    default: return kInvalidInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robustness and strong structural controllability of leader-follower networks"};
  app.require_subcommand(1);
  Globals globals;
  globals.threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--seed", globals.seed, "Root random seed");
  app.add_option("--threads", globals.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", globals.budget, "Search budget (leader subsets or PMI expansions)");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  int exit_status = kOk;

  // gen --------------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a graph family member");
  gen->require_subcommand(1);
  std::string gen_out;
  std::vector<int> chain_sizes;
  auto* gen_chain = gen->add_subcommand("clique-chain", "Clique chain G_D(n_1, ..., n_{D+1})");
  gen_chain->add_option("sizes", chain_sizes, "Clique sizes")->required();
  gen_chain->add_option("-o,--output", gen_out, "Output file (.json or edge list); stdout by default");
  gen_chain->callback([&] {
    const CliqueChainSpec spec(chain_sizes);
    write_document(GraphDocument{clique_chain(spec), {}, std::nullopt, {}}, gen_out);
  });

  int gen_k = 0, gen_d = 0, gen_trim = 0;
  auto* gen_m = gen->add_subcommand("m", "Sparse minimal-leader construction M(k, D)");
  auto* gen_mbar = gen->add_subcommand("mbar", "Densified construction Mbar(k, D)");
  for (auto* sub : {gen_m, gen_mbar}) {
    sub->add_option("--k", gen_k, "Leaders")->required();
    sub->add_option("--d", gen_d, "Diameter")->required();
    sub->add_option("-o,--output", gen_out, "Output file; stdout by default");
  }
  gen_mbar->add_option("--trim", gen_trim, "Trim to this many nodes");
  gen_m->callback([&] { write_document(document_of(construct_m(gen_k, gen_d)), gen_out); });
  gen_mbar->callback([&] {
    auto m = construct_mbar(gen_k, gen_d);
    if (gen_trim > 0) m = trim_to_n(m, gen_trim);
    write_document(document_of(m), gen_out);
  });

  // analysis subcommands share --graph and --leaders --------------------------------
  std::string graph_path;
  std::vector<NodeId> leader_args;
  auto add_graph = [&](CLI::App* sub, bool with_leaders) {
    sub->add_option("--graph", graph_path, "Graph file (.json or edge list)")->required()->check(CLI::ExistingFile);
    if (with_leaders) sub->add_option("--leaders", leader_args, "Leader node ids, in order");
  };

  std::string kf_method = "eigen";
  double kf_wmin = 1.0;
  auto* kf = app.add_subcommand("kirchhoff", "Kirchhoff index and worst-case robustness");
  add_graph(kf, false);
  kf->add_option("--method", kf_method)->check(CLI::IsMember({"eigen", "resistance"}));
  kf->add_option("--w-min", kf_wmin, "Lower weight bound for the worst case");
  kf->callback([&] {
    const auto doc = load_graph_file(graph_path);
    const auto w = doc.weights_or_unit();
    const auto r = kirchhoff(doc.graph, w, kf_method == "eigen" ? KirchhoffMethod::eigen : KirchhoffMethod::resistance);
    emit_record(globals, {{"num_nodes", doc.graph.num_nodes()},
                          {"kf", r.kf},
                          {"method", kf_method},
                          {"worst_case", worst_case_kirchhoff(doc.graph, kf_wmin)},
                          {"dispersion", theoretical_dispersion(doc.graph, w)}});
  });

  std::string pmi_mode = "exact";
  auto* pmi = app.add_subcommand("pmi", "Longest PMI sequence of distance-to-leader vectors");
  add_graph(pmi, true);
  pmi->add_option("--mode", pmi_mode)->check(CLI::IsMember({"exact", "greedy"}));
  pmi->callback([&] {
    const auto doc = load_graph_file(graph_path);
    const auto leaders = leaders_for(doc, leader_args);
    const auto dl = dl_matrix(doc.graph, leaders);
    const auto s = longest_pmi(dl, pmi_mode == "exact" ? PmiMode::exact : PmiMode::greedy,
                               std::min<std::uint64_t>(globals.budget, 10'000'000));
    emit_record(globals, {{"num_nodes", doc.graph.num_nodes()},
                          {"length", s.length()},
                          {"full", s.length() == doc.graph.num_nodes()},
                          {"order", s.order},
                          {"witness", s.witness}});
  });

  auto* lieep = app.add_subcommand("lieep", "Maximal leader-invariant external equitable partition");
  add_graph(lieep, true);
  lieep->callback([&] {
    const auto doc = load_graph_file(graph_path);
    const auto p = maximal_lieep(doc.graph, leaders_for(doc, leader_args));
    emit_record(globals, {{"num_cells", p.num_cells()}, {"all_singletons", p.all_singletons()}, {"cells", p.cells}});
  });

  int trials = 50;
  double w_min = 1.0, w_max = 10.0;
  auto* rank = app.add_subcommand("rank", "Randomized controllability-rank estimate");
  add_graph(rank, true);
  rank->add_option("--trials", trials)->check(CLI::PositiveNumber);
  rank->add_option("--w-min", w_min);
  rank->add_option("--w-max", w_max);
  rank->callback([&] {
    const auto doc = load_graph_file(graph_path);
    const auto r = ssc_rank_oracle(doc.graph, leaders_for(doc, leader_args), trials, w_min, w_max, globals.seed,
                                   globals.threads);
    emit_record(globals, {{"num_nodes", doc.graph.num_nodes()},
                          {"min_rank", r.min_rank},
                          {"max_rank", r.max_rank},
                          {"draws", r.draws},
                          {"estimate", r.estimate}});
  });

  std::string ml_mode = "pmi";
  auto* minl = app.add_subcommand("minleaders", "Smallest leader set with a full PMI sequence or SSC estimate");
  add_graph(minl, false);
  minl->add_option("--mode", ml_mode)->check(CLI::IsMember({"pmi", "ssc"}));
  minl->add_option("--trials", trials)->check(CLI::PositiveNumber);
  minl->callback([&] {
    const auto doc = load_graph_file(graph_path);
    LeaderSearchOptions opt;
    opt.budget = globals.budget;
    opt.trials = trials;
    opt.seed = globals.seed;
    opt.threads = globals.threads;
    const auto r = ml_mode == "pmi" ? min_leaders_full_pmi(doc.graph, opt) : min_leaders_ssc_estimate(doc.graph, opt);
    emit_record(globals, {{"mode", ml_mode},
                          {"k_found", r.k_found},
                          {"witness_leaders", r.witness_leaders ? json(r.witness_leaders->nodes()) : json::array()},
                          {"certificate", std::string(to_string(r.certificate))},
                          {"subsets_examined", r.subsets_examined}});
    if (r.certificate == Certificate::exhausted) exit_status = kBudget;
  });

  int search_n = 0, search_d = 0;
  auto* search = app.add_subcommand("search", "Exhaustive searches");
  search->require_subcommand(1);
  auto* search_chain = search->add_subcommand("clique-chain", "Minimum-K_f clique chain for N nodes, diameter D");
  search_chain->add_option("--n", search_n)->required();
  search_chain->add_option("--d", search_d)->required();
  search_chain->callback([&] {
    const auto r = optimal_clique_chain_search(search_n, search_d, globals.threads);
    emit_record(globals, {{"N", search_n}, {"D", search_d}, {"spec", r.spec.sizes()}, {"kf", r.kf},
                          {"candidates", r.candidates}});
  });

  SimConfig sim;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo dispersion of noisy consensus");
  add_graph(simulate, false);
  simulate->add_option("--dt", sim.dt, "Step size; 0 picks 0.05/lambda_max");
  simulate->add_option("--horizon", sim.horizon, "Simulated time per trial; 0 picks a mixing-time multiple");
  simulate->add_option("--burn-in", sim.burn_in);
  simulate->add_option("--trials", sim.trials);
  simulate->callback([&] {
    const auto doc = load_graph_file(graph_path);
    sim.seed = globals.seed;
    sim.threads = globals.threads;
    const auto e = simulate_dispersion(doc.graph, doc.weights_or_unit(), sim);
    emit_record(globals, {{"h_hat", e.h_hat}, {"h_theory", e.h_theory}, {"rel_err", e.rel_err}, {"ci95", e.ci95},
                          {"dt", e.dt}, {"horizon", e.horizon}, {"trials", e.trials}});
  });

  std::vector<int> d_list, k_list, n_list;
  auto* table = app.add_subcommand("table1", "Optimal clique chains versus Mbar on a (D, k) grid");
  table->add_option("--d-list", d_list, "Diameters (default: the published 20-cell grid)");
  table->add_option("--k-list", k_list, "Leader counts");
  table->callback([&] {
    if (d_list.empty() != k_list.empty())
      throw Error(ErrorCode::InvalidArgument, "--d-list and --k-list go together");
    const auto cells = d_list.empty() ? table1_cells() : grid_from_lists(d_list, k_list);
    emit_rows(globals, reproduce_table1(cells, globals.threads));
  });

  auto* figures = app.add_subcommand("figures", "Data series for the comparison plots");
  figures->require_subcommand(1);
  int fig_d = 0, fig_k = 0;
  auto* fig_leaders = figures->add_subcommand("leaders", "Leaders needed: clique chains vs Mbar");
  fig_leaders->add_option("--d", fig_d)->required();
  fig_leaders->add_option("--n-list", n_list)->required();
  fig_leaders->callback([&] { emit_rows(globals, figure_leader_comparison(fig_d, n_list)); });
  auto* fig_kf = figures->add_subcommand("kf", "K_f of optimal chains, Mbar and bounds; fix --k or --d");
  auto* opt_k = fig_kf->add_option("--k", fig_k, "Fixed leader count (vary --d-list)");
  auto* opt_d = fig_kf->add_option("--d", fig_d, "Fixed diameter (vary --k-list)");
  opt_k->excludes(opt_d);
  fig_kf->add_option("--d-list", d_list);
  fig_kf->add_option("--k-list", k_list);
  fig_kf->callback([&] {
    if (opt_k->count() && !d_list.empty())
      emit_rows(globals, figure_kf_vs_diameter(fig_k, d_list, globals.threads));
    else if (opt_d->count() && !k_list.empty())
      emit_rows(globals, figure_kf_vs_leaders(fig_d, k_list, globals.threads));
    else
      throw Error(ErrorCode::InvalidArgument, "use --k with --d-list, or --d with --k-list");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return exit_status;
}
