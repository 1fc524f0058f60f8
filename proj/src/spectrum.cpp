#include "leafspan/spectrum.hpp"

#include <string>

#include "detail.hpp"
#include "leafspan/errors.hpp"

namespace leafspan {

bool LeafSpectrum::contiguous() const {
  if (!exhaustive) return true;
  if (exhaustive->empty()) return false;
  return *exhaustive->begin() == min_leaves && *exhaustive->rbegin() == max_leaves &&
         static_cast<int>(exhaustive->size()) == max_leaves - min_leaves + 1;
}

LeafWitness min_leaf_exact(const GraphPtr& g, const Budgets& budgets) {
  const int n = g->vertex_count();
  if (!is_connected(*g)) throw InvalidInput("graph is disconnected");
  if (n == 1) return {0, SpanningTree(g, {})};
  if (auto path = hamiltonian_path(*g, budgets.search)) {
    SpanningTree tree = detail::path_tree(g, *path);
    return {tree.leaf_count(), std::move(tree)};
  }
  // Not traceable, so 3 leaves is optimal once seen.
  std::optional<SpanningTree> best;
  detail::enumerate_until(g, budgets.trees, [&best](const SpanningTree& t) {
    if (!best || t.leaf_count() < best->leaf_count()) best = t;
    return best->leaf_count() > 3;
  });
  return {best->leaf_count(), std::move(*best)};
}

LeafSpectrum compute_spectrum(const GraphPtr& g, const Budgets& budgets) {
  LeafWitness lo = min_leaf_exact(g, budgets);
  LeafWitness hi = max_leaf_exact(g, budgets.search);
  LeafSpectrum spectrum;
  spectrum.min_leaves = lo.leaves;
  spectrum.max_leaves = hi.leaves;
  spectrum.witnesses.emplace(lo.leaves, std::move(lo.tree));
  spectrum.witnesses.emplace(hi.leaves, std::move(hi.tree));
  return spectrum;
}

SpanningTree find_tree_with_k_leaves(const LeafSpectrum& spectrum, int k) {
  if (k < spectrum.min_leaves || k > spectrum.max_leaves) {
    throw Infeasible("no spanning tree with " + std::to_string(k) + " leaves; L(G) = [" +
                     std::to_string(spectrum.min_leaves) + ", " + std::to_string(spectrum.max_leaves) + "]");
  }
  if (auto it = spectrum.witnesses.find(k); it != spectrum.witnesses.end()) return it->second;

  const SpanningTree& low = spectrum.witnesses.at(spectrum.min_leaves);
  const SpanningTree& high = spectrum.witnesses.at(spectrum.max_leaves);
  const ExchangeTrace trace = transform_sequence(low, high);
  SpanningTree current = trace.start;
  for (const ExchangeStep& step : trace.steps) {
    current = exchange_step(current, step.edge_in, step.edge_out);
    if (current.leaf_count() == k) return current;
  }
  // Unreachable: the profile moves by at most 1 from min to max.
  throw std::logic_error("exchange trace skipped leaf count " + std::to_string(k));
}

SpanningTree find_tree_with_k_leaves(const GraphPtr& g, int k, const Budgets& budgets) {
  return find_tree_with_k_leaves(compute_spectrum(g, budgets), k);
}

}  // namespace leafspan
