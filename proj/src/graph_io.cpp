#include "netctl/graph_io.hpp"

#include "netctl/error.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace netctl {

EdgeWeights GraphDocument::weights_or_unit() const {
  return weights ? *weights : EdgeWeights::uniform(graph);
}

nlohmann::json to_json(const GraphDocument& doc) {
  nlohmann::json j;
  j["num_nodes"] = doc.graph.num_nodes();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : doc.graph.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  if (!doc.leaders.empty()) j["leaders"] = doc.leaders;
  if (doc.weights) {
    j["weights"] = doc.weights->values();
    j["w_min"] = doc.weights->w_min();
    j["w_max"] = doc.weights->w_max();
  }
  if (!doc.labels.empty()) j["labels"] = doc.labels;
  return j;
}

GraphDocument document_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("num_nodes").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::ParseError, "edge must be [u,v]");
      edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
    }
    GraphDocument doc{build_graph(n, edges), {}, std::nullopt, {}};
    if (j.contains("leaders")) doc.leaders = j["leaders"].get<std::vector<NodeId>>();
    if (j.contains("weights")) {
      // Weights are aligned with the file's edge order; re-key them onto the canonical order.
      const auto raw = j["weights"].get<std::vector<double>>();
      if (raw.size() != edges.size())
        throw Error(ErrorCode::MissingWeight, "weights must align with edges");
      std::vector<double> aligned(doc.graph.num_edges(), std::numeric_limits<double>::quiet_NaN());
      const auto& canon = doc.graph.edges();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        Edge e = edges[i].first < edges[i].second ? edges[i] : Edge{edges[i].second, edges[i].first};
        auto it = std::lower_bound(canon.begin(), canon.end(), e);
        aligned[static_cast<std::size_t>(it - canon.begin())] = raw[i];
      }
      const double lo = j.contains("w_min") ? j["w_min"].get<double>()
                                            : *std::min_element(raw.begin(), raw.end());
      const double hi = j.contains("w_max") ? j["w_max"].get<double>()
                                            : *std::max_element(raw.begin(), raw.end());
      doc.weights.emplace(doc.graph, std::move(aligned), lo, hi);
    }
    if (j.contains("labels")) {
      doc.labels = j["labels"].get<std::vector<std::string>>();
      if (doc.labels.size() != n) throw Error(ErrorCode::ParseError, "one label per node required");
    }
    for (NodeId l : doc.leaders) {
      if (l >= n) throw Error(ErrorCode::OutOfRangeNode, "leader " + std::to_string(l));
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g, const EdgeWeights* w) {
  out << g.num_nodes() << '\n';
  const auto old_precision = out.precision(std::numeric_limits<double>::max_digits10);
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v;
    if (w) out << ' ' << w->weight(u, v);
    out << '\n';
  }
  out.precision(old_precision);
}

GraphDocument read_edge_list(std::istream& in) {
  std::string line;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!n) {
      long long value = 0;
      if (!(fields >> value) || value <= 0)
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected N");
      n = static_cast<std::size_t>(value);
      continue;
    }
    long long u = 0, v = 0;
    if (!(fields >> u >> v) || u < 0 || v < 0)
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    edges.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    double w = 0.0;
    if (fields >> w) weights.push_back(w);
  }
  if (!n) throw Error(ErrorCode::ParseError, "empty edge list");
  if (!weights.empty() && weights.size() != edges.size())
    throw Error(ErrorCode::MissingWeight, "either every edge line has a weight or none does");

  nlohmann::json j{{"num_nodes", *n}};
  j["edges"] = nlohmann::json::array();
  for (const auto& [u, v] : edges) j["edges"].push_back({u, v});
  if (!weights.empty()) j["weights"] = weights;
  return document_from_json(j);
}

GraphDocument load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  if (path.size() >= 5 && path.ends_with(".json")) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    return document_from_json(j);
  }
  return read_edge_list(in);
}

void save_graph_file(const std::string& path, const GraphDocument& doc) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  if (path.ends_with(".json")) {
    out << to_json(doc).dump(2) << '\n';
  } else {
    write_edge_list(out, doc.graph, doc.weights ? &*doc.weights : nullptr);
  }
}

}  // namespace netctl
