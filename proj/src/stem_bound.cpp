#include <algorithm>
#include <limits>
#include <random>

#include "leafspan/errors.hpp"
#include "leafspan/spectrum.hpp"

namespace leafspan {

Subtree maximal_leaf_subtree(const Graph& g, const std::vector<Vertex>& stems) {
  const int n = g.vertex_count();
  std::vector<int> rank(n, -1);
  for (std::size_t i = 0; i < stems.size(); ++i) rank[stems[i]] = static_cast<int>(i);

  Subtree sub;
  auto earliest_stem_neighbor = [&](Vertex v, int below) {
    Vertex best = -1;
    for (Vertex w : g.neighbors(v)) {
      if (rank[w] >= 0 && rank[w] < below && (best < 0 || rank[w] < rank[best])) best = w;
    }
    return best;
  };
  for (std::size_t i = 1; i < stems.size(); ++i) {
    const Vertex parent = earliest_stem_neighbor(stems[i], static_cast<int>(i));
    if (parent < 0) throw InvalidInput("stem sequence is not connected in listed order");
    sub.edges.emplace_back(stems[i], parent);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (rank[v] >= 0) continue;
    const Vertex parent = earliest_stem_neighbor(v, std::numeric_limits<int>::max());
    if (parent >= 0) {
      sub.edges.emplace_back(v, parent);
      ++sub.attached;
    }
  }
  std::vector<int> degree(n, 0);
  for (const Edge& e : sub.edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int d : degree) {
    sub.leaves += (d == 1);
    sub.stems += (d >= 2);
  }
  return sub;
}

StemLeafReport check_stem_leaf_bound(const Graph& g, std::int64_t trials, std::uint64_t seed) {
  const int n = g.vertex_count();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 6) throw InvalidInput("stem/leaf bound check needs a 6-regular graph");
  }
  if (n == 0) throw InvalidInput("empty graph");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_vertex(0, n - 1);
  std::uniform_int_distribution<int> pick_size(1, n);

  StemLeafReport report;
  report.min_slack = std::numeric_limits<int>::max();
  report.max_slack = std::numeric_limits<int>::min();
  std::vector<bool> in(n);
  for (std::int64_t t = 0; t < trials; ++t) {
    const int size = pick_size(rng);
    std::fill(in.begin(), in.end(), false);
    std::vector<Vertex> stems{pick_vertex(rng)};
    in[stems[0]] = true;
    std::vector<Vertex> frontier;
    auto push_neighbors = [&](Vertex v) {
      for (Vertex w : g.neighbors(v)) {
        if (!in[w] && std::find(frontier.begin(), frontier.end(), w) == frontier.end()) frontier.push_back(w);
      }
    };
    push_neighbors(stems[0]);
    while (static_cast<int>(stems.size()) < size && !frontier.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
      const std::size_t i = pick(rng);
      const Vertex v = frontier[i];
      frontier[i] = frontier.back();
      frontier.pop_back();
      in[v] = true;
      stems.push_back(v);
      push_neighbors(v);
    }

    const Subtree sub = maximal_leaf_subtree(g, stems);
    const int slack = 2 * sub.stems + 4 - sub.leaves;
    ++report.trials;
    report.violations += (slack < 0);
    report.tight += (slack == 0);
    report.min_slack = std::min(report.min_slack, slack);
    report.max_slack = std::max(report.max_slack, slack);
  }
  if (report.trials == 0) report.min_slack = report.max_slack = 0;
  return report;
}

}  // namespace leafspan
