#pragma once

#include "netctl/graph.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace netctl {

/// A graph plus the optional attributes that travel with it through files.
///
/// JSON layout (field names are part of the file format):
///
///     {
///       "num_nodes": 6,
///       "edges":    [[0,1],[0,2],...],      // canonical order, first < second
///       "leaders":  [1,3],                   // optional, order significant
///       "weights":  [1.0, 2.5, ...],         // optional, aligned with "edges"
///       "w_min": 1.0, "w_max": 3.0,          // optional, only with "weights"
///       "labels":   ["l1","x","u11",...]     // optional, one per node
///     }
struct GraphDocument {
  Graph graph;
  std::vector<NodeId> leaders;
  std::optional<EdgeWeights> weights;
  std::vector<std::string> labels;

  /// The document's weights, or unit weights when none are stored.
  EdgeWeights weights_or_unit() const;
};

nlohmann::json to_json(const GraphDocument& doc);
GraphDocument document_from_json(const nlohmann::json& j);

/// Edge-list text: first non-comment line "N", then one "u v" or "u v w" per line.
/// Lines starting with '#' are ignored. A weighted file must weight every edge.
void write_edge_list(std::ostream& out, const Graph& g, const EdgeWeights* w = nullptr);
GraphDocument read_edge_list(std::istream& in);

/// Reads a file, choosing JSON for a ".json" extension and edge-list text otherwise.
GraphDocument load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const GraphDocument& doc);

}  // namespace netctl
