#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "leafspan/exchange.hpp"
#include "leafspan/spectrum.hpp"

namespace leafspan {

/// Raw contents of an edge-list file: header `n m`, then m lines `u v`.
/// `#` starts a comment; comment lines of the form `# key: value` are kept
/// as directives.
struct EdgeListFile {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::map<std::string, std::string> directives;
};

/// Throws InvalidInput with a line number on malformed input.
EdgeListFile parse_edge_list(std::istream& in);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);

/// Stable 64-bit FNV-1a hash of the normalized edge set, printed as 16 hex
/// digits. Independent of comments and edge order in the source file.
std::string graph_fingerprint(const Graph& g);

/// Edge list of the tree preceded by `# tree-of: <fingerprint>`.
void write_tree(std::ostream& out, const SpanningTree& t);
/// Rejects files whose tree-of directive is missing or names another graph.
SpanningTree read_tree(std::istream& in, const GraphPtr& host);
SpanningTree read_tree_file(const std::string& path, const GraphPtr& host);

/// One line per vertex: `index label`.
void write_labels(std::ostream& out, const std::vector<std::string>& labels);

nlohmann::json edges_to_json(std::span<const Edge> edges);
std::vector<Edge> edges_from_json(const nlohmann::json& j);

/// {start_edges, steps: [{in, out, leaves_after}], leaf_profile}
nlohmann::json trace_to_json(const ExchangeTrace& trace);
/// Rebuilds and replays a trace; throws InvalidInput if any step is illegal
/// or the recorded leaf counts disagree with the replay.
ExchangeTrace trace_from_json(const nlohmann::json& j, const GraphPtr& host);

/// {n, m, min_leaves, max_leaves, exhaustive?, witness_edges_by_k}
nlohmann::json spectrum_to_json(const Graph& g, const LeafSpectrum& spectrum);

}  // namespace leafspan
