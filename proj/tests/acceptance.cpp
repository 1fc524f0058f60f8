// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "leafspan/constructions.hpp"
#include "leafspan/exchange.hpp"
#include "leafspan/spectrum.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace leafspan;
using namespace leafspan::testing;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string join(const std::set<int>& s) {
  std::string out = "{";
  for (int v : s) out += (out.size() > 1 ? "," : "") + std::to_string(v);
  return out + "}";
}

// Random connected graphs with 4 <= n <= 7, shared by criteria 2 and 9.
std::vector<GraphPtr> small_corpus() {
  Rng rng(20240607);
  std::vector<GraphPtr> corpus;
  for (int i = 0; i < 500; ++i) {
    const int n = 4 + i % 4;
    const double p = 0.15 + 0.7 * std::uniform_real_distribution<double>(0, 1)(rng);
    corpus.push_back(share(random_connected_graph(n, p, rng)));
  }
  return corpus;
}

Outcome contiguity() {
  Rng rng(1);
  int graphs = 0;
  for (; graphs < 1000; ++graphs) {
    const int n = 4 + graphs % 6;
    const double p = 0.1 + 0.6 * std::uniform_real_distribution<double>(0, 1)(rng);
    const GraphPtr g = share(random_connected_graph(n, p, rng));
    const LeafSpectrum s = leaf_spectrum_oracle(g);
    std::set<int> expected;
    for (int k = s.min_leaves; k <= s.max_leaves; ++k) expected.insert(k);
    if (*s.exhaustive != expected) {
      return {false, "graph " + std::to_string(graphs) + " has leaf set " + join(*s.exhaustive)};
    }
  }
  return {true, std::to_string(graphs) + " graphs, no gaps"};
}

Outcome exchange_bound(const std::vector<GraphPtr>& corpus) {
  std::int64_t exchanges = 0;
  std::int64_t violations = 0;
  for (const GraphPtr& g : corpus) {
    enumerate_spanning_trees(g, [&](const SpanningTree& t) {
      const int before = t.leaf_count();
      for (const Edge& in : g->edges()) {
        if (t.contains(in)) continue;
        for (const Edge& out : fundamental_cycle(t, in)) {
          if (out == in) continue;
          const SpanningTree r = exchange_step(t, in, out);
          const int delta = std::abs(count_leaves(g->vertex_count(), r.edges()) - before);
          ++exchanges;
          if (delta > 2 || (in.shares_vertex(out) && delta > 1)) ++violations;
        }
      }
    });
  }
  return {violations == 0,
          std::to_string(exchanges) + " exchanges, " + std::to_string(violations) + " violations"};
}

Outcome transform_contract() {
  Rng rng(3);
  std::int64_t traces = 0;
  std::int64_t violations = 0;
  for (int gi = 0; gi < 50; ++gi) {
    const int n = 5 + gi % 8;
    const GraphPtr g = share(random_connected_graph(n, 0.25 + 0.01 * gi, rng));
    const std::size_t bound = static_cast<std::size_t>(n / 2) * (n - 1);
    for (int pair = 0; pair < 100; ++pair) {
      const SpanningTree a = random_spanning_tree(g, rng);
      const SpanningTree b = random_spanning_tree(g, rng);
      const ExchangeTrace trace = transform_sequence(a, b);
      const std::vector<SpanningTree> trees = trace.replay();
      bool ok = trees.front() == a && trees.back() == b && trace.steps.size() <= bound &&
                trace.leaf_profile.size() == trees.size();
      for (std::size_t i = 0; ok && i < trees.size(); ++i) {
        ok = is_spanning_tree_of(*g, trees[i].edges()) &&
             count_leaves(n, trees[i].edges()) == trace.leaf_profile[i];
        if (ok && i > 0) ok = std::abs(trace.leaf_profile[i] - trace.leaf_profile[i - 1]) <= 1;
      }
      ++traces;
      if (!ok) ++violations;
    }
  }
  return {violations == 0, std::to_string(traces) + " traces, " + std::to_string(violations) + " violations"};
}

Outcome gk_extremal() {
  const LabeledGraph g6 = gen_gk(6);
  const Graph& g = *g6.graph;
  const int kappa = vertex_connectivity(g);
  const std::size_t cds = min_connected_dominating_set(g).vertices.size();
  const LeafWitness max = max_leaf_exact(g6.graph);
  const LeafWitness min = min_leaf_exact(g6.graph);
  const bool pass = g.vertex_count() == 24 && g.edge_count() == 66 && kappa == 4 && cds == 8 &&
                    max.leaves == 16 && max.tree.leaf_count() == 16 && min.leaves == 2 &&
                    is_spanning_tree_of(g, max.tree.edges()) && is_spanning_tree_of(g, min.tree.edges());
  return {pass, "n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) +
                    " kappa=" + std::to_string(kappa) + " cds=" + std::to_string(cds) +
                    " max_leaf=" + std::to_string(max.leaves) + " min_leaf=" + std::to_string(min.leaves)};
}

Outcome gk_every_k() {
  const LabeledGraph g6 = gen_gk(6);
  const LeafSpectrum s = compute_spectrum(g6.graph);
  std::set<int> realized;
  for (int k = 2; k <= 16; ++k) {
    const SpanningTree t = find_tree_with_k_leaves(s, k);
    if (is_spanning_tree_of(*g6.graph, t.edges()) && count_leaves(24, t.edges()) == k) realized.insert(k);
  }
  return {realized.size() == 15, "realized " + join(realized)};
}

Outcome counterexample() {
  const Counterexample cex = gen_counterexample();
  const Graph& g = *cex.graph.graph;
  const int oracle_max = *brute_force_leaf_set(g).rbegin();
  int legal = 0;
  int non_decreasing = 0;
  for (const Edge& in : g.edges()) {
    if (cex.tree.contains(in)) continue;
    for (const Edge& out : fundamental_cycle(cex.tree, in)) {
      if (out == in) continue;
      ++legal;
      if (count_leaves(8, exchange_step(cex.tree, in, out).edges()) >= 5) ++non_decreasing;
    }
  }
  const int l_t = count_leaves(8, cex.tree.edges());
  const int l_tp = count_leaves(8, cex.max_leaf_tree.edges());
  const bool pass = l_t == 5 && l_tp == 6 && oracle_max == 6 && legal > 0 && non_decreasing == 0 &&
                    is_spanning_tree_of(g, cex.tree.edges()) && is_spanning_tree_of(g, cex.max_leaf_tree.edges());
  return {pass, "l(T)=" + std::to_string(l_t) + " l(T')=" + std::to_string(l_tp) + " oracle max=" +
                    std::to_string(oracle_max) + ", " + std::to_string(non_decreasing) + " of " +
                    std::to_string(legal) + " exchanges keep or raise leaves"};
}

Outcome stem_leaf_bound() {
  std::string detail;
  bool pass = true;
  for (auto [a, b] : {std::pair{5, 5}, std::pair{6, 6}}) {
    const Graph g = *gen_torus_grid(a, b).graph;
    const StemLeafReport r = check_stem_leaf_bound(g, 10'000, 7);
    const Subtree star = maximal_leaf_subtree(g, {0});
    pass = pass && r.trials == 10'000 && r.violations == 0 && star.stems == 1 && star.leaves == 6;
    if (!detail.empty()) detail += "; ";
    detail += "T(" + std::to_string(a) + "," + std::to_string(b) + "): " + std::to_string(r.violations) +
              " violations, star leaves=" + std::to_string(star.leaves);
  }
  return {pass, detail};
}

Outcome hist() {
  std::vector<std::pair<std::string, GraphPtr>> hosts;
  for (const char* name : {"tetrahedron", "octahedron", "icosahedron"}) hosts.emplace_back(name, gen_platonic(name).graph);
  hosts.emplace_back("G_6", gen_gk(6).graph);
  bool pass = true;
  std::string detail;
  for (const auto& [name, g] : hosts) {
    const std::optional<SpanningTree> t = find_hist(g);
    const int n = g->vertex_count();
    bool ok = t.has_value() && is_spanning_tree_of(*g, t->edges());
    if (ok) {
      for (Vertex v = 0; v < n; ++v) ok = ok && t->degree(v) != 2;
      ok = ok && count_leaves(n, t->edges()) >= (n + 1) / 2 + 1;
    }
    pass = pass && ok;
    detail += name + (ok ? "=" + std::to_string(t->leaf_count()) + " leaves" : std::string("=FAIL")) + "; ";
  }
  const bool c5_none = !find_hist(share(cycle_graph(5))).has_value();
  detail += std::string("C5 ") + (c5_none ? "none" : "FOUND");
  return {pass && c5_none, detail};
}

Outcome counting(const std::vector<GraphPtr>& corpus) {
  std::vector<GraphPtr> all = corpus;
  all.push_back(share(petersen_graph()));
  all.push_back(gen_platonic("tetrahedron").graph);
  all.push_back(gen_platonic("octahedron").graph);
  all.push_back(gen_counterexample().graph.graph);
  all.push_back(share(wheel_graph(6)));
  all.push_back(share(complete_graph(7)));
  int mismatches = 0;
  std::int64_t petersen = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const std::int64_t counted = enumerate_spanning_trees(all[i], [](const SpanningTree&) {});
    if (counted != kirchhoff_tree_count(*all[i])) ++mismatches;
    if (i == corpus.size()) petersen = counted;
  }
  return {mismatches == 0 && petersen == 2000,
          std::to_string(all.size()) + " graphs, " + std::to_string(mismatches) +
              " mismatches, Petersen=" + std::to_string(petersen)};
}

}  // namespace

int main() {
  const std::vector<GraphPtr> corpus = small_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"leaf spectrum contiguous (1000 random graphs, 4<=n<=9)", contiguity},
      {"single exchange moves leaves by <=2, <=1 when adjacent (n<=7 corpus)", [&] { return exchange_bound(corpus); }},
      {"transform_sequence contract (50 graphs x 100 pairs, n<=12)", transform_contract},
      {"G_6: n=24 m=66 kappa=4 cds=8 max=16 min=2", gk_extremal},
      {"G_6: a tree with k leaves for every k in 2..16", gk_every_k},
      {"counterexample: l(T)=5, l(T')=6 maximum, every exchange from T loses leaves", counterexample},
      {"torus grids: leaves <= 2*stems+4, star attains equality", stem_leaf_bound},
      {"HIST on platonic solids and G_6, none on C5", hist},
      {"spanning tree count equals Kirchhoff determinant", [&] { return counting(corpus); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s [%s] (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
