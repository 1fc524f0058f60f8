#include "leafspan/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "leafspan/errors.hpp"

namespace leafspan {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<long long> parse_ints(const std::string& text, int line_no) {
  std::vector<long long> values;
  std::istringstream tokens(text);
  std::string tok;
  while (tokens >> tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
    }
    values.push_back(value);
  }
  return values;
}

}  // namespace

EdgeListFile parse_edge_list(std::istream& in) {
  EdgeListFile file;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long expected = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = line;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      const std::string comment = trim(std::string_view(line).substr(hash + 1));
      if (auto colon = comment.find(':'); colon != std::string::npos && colon > 0) {
        file.directives[trim(comment.substr(0, colon))] = trim(comment.substr(colon + 1));
      }
      body = line.substr(0, hash);
    }
    const auto values = parse_ints(body, line_no);
    if (values.empty()) continue;
    if (values.size() != 2) {
      throw InvalidInput("line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!have_header) {
      if (values[0] < 0 || values[1] < 0) throw InvalidInput("line " + std::to_string(line_no) + ": negative count");
      file.n = static_cast<int>(values[0]);
      expected = values[1];
      have_header = true;
      continue;
    }
    if (static_cast<long long>(file.edges.size()) == expected) {
      throw InvalidInput("line " + std::to_string(line_no) + ": more edges than the header's m = " +
                         std::to_string(expected));
    }
    for (long long x : values) {
      if (x < 0 || x >= file.n) {
        throw InvalidInput("line " + std::to_string(line_no) + ": vertex " + std::to_string(x) +
                           " outside [0," + std::to_string(file.n) + ")");
      }
    }
    file.edges.emplace_back(static_cast<int>(values[0]), static_cast<int>(values[1]));
  }
  if (!have_header) throw InvalidInput("missing 'n m' header");
  if (static_cast<long long>(file.edges.size()) != expected) {
    throw InvalidInput("header promises " + std::to_string(expected) + " edges, found " +
                       std::to_string(file.edges.size()));
  }
  return file;
}

Graph read_graph(std::istream& in) {
  const EdgeListFile file = parse_edge_list(in);
  return build_graph(file.n, file.edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return read_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string graph_fingerprint(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint32_t x) {
    for (int i = 0; i < 4; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(static_cast<std::uint32_t>(g.vertex_count()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint32_t>(e.u));
    mix(static_cast<std::uint32_t>(e.v));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void write_tree(std::ostream& out, const SpanningTree& t) {
  out << "# tree-of: " << graph_fingerprint(t.host()) << '\n';
  out << "# leaves: " << t.leaf_count() << '\n';
  out << t.vertex_count() << ' ' << t.edges().size() << '\n';
  for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

SpanningTree read_tree(std::istream& in, const GraphPtr& host) {
  const EdgeListFile file = parse_edge_list(in);
  const auto it = file.directives.find("tree-of");
  if (it == file.directives.end()) throw InvalidInput("tree file lacks a '# tree-of:' header");
  const std::string expected = graph_fingerprint(*host);
  if (it->second != expected) {
    throw InvalidInput("tree file belongs to graph " + it->second + ", not " + expected);
  }
  if (file.n != host->vertex_count()) throw InvalidInput("tree vertex count differs from host");
  std::vector<Edge> edges;
  for (auto [u, v] : file.edges) edges.emplace_back(u, v);
  return SpanningTree(host, std::move(edges));
}

SpanningTree read_tree_file(const std::string& path, const GraphPtr& host) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return read_tree(in, host);
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) out << v << ' ' << labels[v] << '\n';
}

nlohmann::json edges_to_json(std::span<const Edge> edges) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::vector<Edge> edges_from_json(const nlohmann::json& j) {
  std::vector<Edge> edges;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw InvalidInput("edge must be a [u, v] pair");
    edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
  }
  return edges;
}

nlohmann::json trace_to_json(const ExchangeTrace& trace) {
  nlohmann::json steps = nlohmann::json::array();
  for (const ExchangeStep& s : trace.steps) {
    steps.push_back({{"in", {s.edge_in.u, s.edge_in.v}},
                     {"out", {s.edge_out.u, s.edge_out.v}},
                     {"leaves_after", s.leaf_count_after}});
  }
  return {{"start_edges", edges_to_json(trace.start.edges())},
          {"steps", std::move(steps)},
          {"leaf_profile", trace.leaf_profile}};
}

ExchangeTrace trace_from_json(const nlohmann::json& j, const GraphPtr& host) {
  try {
    ExchangeTrace trace{SpanningTree(host, edges_from_json(j.at("start_edges"))), {}, {}};
    SpanningTree current = trace.start;
    trace.leaf_profile.push_back(current.leaf_count());
    for (const auto& s : j.at("steps")) {
      const auto in = edges_from_json(nlohmann::json::array({s.at("in")}));
      const auto out = edges_from_json(nlohmann::json::array({s.at("out")}));
      current = exchange_step(current, in[0], out[0]);
      const int recorded = s.at("leaves_after").get<int>();
      if (recorded != current.leaf_count()) throw InvalidInput("recorded leaf count disagrees with replay");
      trace.steps.push_back({in[0], out[0], recorded});
      trace.leaf_profile.push_back(recorded);
    }
    if (j.contains("leaf_profile") && j.at("leaf_profile").get<std::vector<int>>() != trace.leaf_profile) {
      throw InvalidInput("leaf_profile disagrees with replay");
    }
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed trace: ") + e.what());
  }
}

nlohmann::json spectrum_to_json(const Graph& g, const LeafSpectrum& spectrum) {
  nlohmann::json witnesses = nlohmann::json::object();
  for (const auto& [k, tree] : spectrum.witnesses) witnesses[std::to_string(k)] = edges_to_json(tree.edges());
  nlohmann::json j{{"n", g.vertex_count()},
                   {"m", g.edge_count()},
                   {"min_leaves", spectrum.min_leaves},
                   {"max_leaves", spectrum.max_leaves},
                   {"witness_edges_by_k", std::move(witnesses)}};
  if (spectrum.exhaustive) j["exhaustive"] = std::vector<int>(spectrum.exhaustive->begin(), spectrum.exhaustive->end());
  return j;
}

}  // namespace leafspan
