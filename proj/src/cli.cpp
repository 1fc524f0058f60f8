#include "leafspan/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leafspan/constructions.hpp"
#include "leafspan/errors.hpp"
#include "leafspan/io.hpp"

namespace leafspan::cli {

using nlohmann::json;

namespace {

void write_text(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  body(file);
  if (!file) throw InvalidInput("write to '" + path + "' failed");
}

// Sends a JSON document to the output file when one is configured, stdout
// otherwise.
void emit(const RunConfig& config, std::ostream& out, const json& doc) {
  if (config.output_path) {
    write_text(*config.output_path, [&doc](std::ostream& os) { os << doc.dump(2) << '\n'; });
  } else {
    out << doc.dump(2) << '\n';
  }
}

GraphPtr load_input(const RunConfig& config) {
  if (!config.input_path) throw InvalidInput("this command needs an input graph (-i)");
  Graph g = read_graph_file(*config.input_path);
  if (g.vertex_count() == 0) throw InvalidInput("input graph has no vertices");
  if (!is_connected(g)) throw InvalidInput("input graph is disconnected");
  return share(std::move(g));
}

json tree_json(const SpanningTree& t) {
  return {{"leaves", t.leaf_count()}, {"edges", edges_to_json(t.edges())}};
}

int run_gen(const RunConfig& config, std::ostream& out) {
  LabeledGraph lg;
  std::optional<Counterexample> cex;
  if (config.family == "gk") {
    if (!config.k) throw InvalidInput("gen gk needs --k");
    lg = gen_gk(*config.k, config.verify_4_connectivity);
  } else if (config.family == "counterexample") {
    cex = gen_counterexample();
    lg = cex->graph;
  } else if (config.family == "torus") {
    lg = gen_torus_grid(config.torus_a, config.torus_b);
  } else if (config.family == "platonic") {
    lg = gen_platonic(config.solid);
  } else {
    throw InvalidInput("unknown family '" + config.family + "'");
  }
  const Graph& g = *lg.graph;
  if (config.verify_connectivity && !is_connected(g)) throw std::logic_error("generated graph is disconnected");
  if (config.verify_4_connectivity && !vertex_connectivity_at_least(g, 4)) {
    throw std::logic_error("generated graph is not 4-connected");
  }

  if (!config.output_path) {
    out << "# family: " << to_string(lg.family) << '\n';
    write_edge_list(out, g);
    if (config.labels_path) write_text(*config.labels_path, [&](std::ostream& os) { write_labels(os, lg.labels); });
    return kOk;
  }
  const std::string& path = *config.output_path;
  const std::string labels = config.labels_path.value_or(path + ".labels");
  write_text(path, [&](std::ostream& os) {
    os << "# family: " << to_string(lg.family) << '\n';
    write_edge_list(os, g);
  });
  write_text(labels, [&](std::ostream& os) { write_labels(os, lg.labels); });
  json summary{{"family", to_string(lg.family)},
               {"n", g.vertex_count()},
               {"m", g.edge_count()},
               {"fingerprint", graph_fingerprint(g)},
               {"graph_file", path},
               {"labels_file", labels}};
  if (cex) {
    const std::string t_path = path + ".T.tree";
    const std::string tp_path = path + ".Tprime.tree";
    write_text(t_path, [&](std::ostream& os) { write_tree(os, cex->tree); });
    write_text(tp_path, [&](std::ostream& os) { write_tree(os, cex->max_leaf_tree); });
    summary["tree_files"] = {t_path, tp_path};
  }
  out << summary.dump(2) << '\n';
  return kOk;
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
  const GraphPtr g = load_input(config);
  const LeafSpectrum spectrum = compute_spectrum(g, config.budgets);
  json doc = spectrum_to_json(*g, spectrum);
  if (!config.emit_witness) doc.erase("witness_edges_by_k");
  emit(config, out, doc);
  return kOk;
}

int run_interpolate(const RunConfig& config, std::ostream& out) {
  if (!config.k) throw InvalidInput("interpolate needs --k");
  const GraphPtr g = load_input(config);
  const LeafSpectrum spectrum = compute_spectrum(g, config.budgets);
  const SpanningTree tree = find_tree_with_k_leaves(spectrum, *config.k);
  json doc{{"k", *config.k},
           {"leaves", tree.leaf_count()},
           {"min_leaves", spectrum.min_leaves},
           {"max_leaves", spectrum.max_leaves}};
  if (config.emit_witness) doc.update(tree_json(tree));
  if (config.output_path) {
    write_text(*config.output_path, [&tree](std::ostream& os) { write_tree(os, tree); });
    doc["tree_file"] = *config.output_path;
  }
  out << doc.dump(2) << '\n';
  return kOk;
}

int run_transform(const RunConfig& config, std::ostream& out) {
  if (!config.tree_a || !config.tree_b) throw InvalidInput("transform needs --tree-a and --tree-b");
  const GraphPtr g = load_input(config);
  const SpanningTree a = read_tree_file(*config.tree_a, g);
  const SpanningTree b = read_tree_file(*config.tree_b, g);
  emit(config, out, trace_to_json(transform_sequence(a, b)));
  return kOk;
}

int run_oracle(const RunConfig& config, std::ostream& out) {
  const GraphPtr g = load_input(config);
  const LeafSpectrum spectrum = leaf_spectrum_oracle(g, config.budgets.trees);
  const std::int64_t trees = enumerate_spanning_trees(g, [](const SpanningTree&) {}, config.budgets.trees);
  json doc = spectrum_to_json(*g, spectrum);
  if (!config.emit_witness) doc.erase("witness_edges_by_k");
  doc["spanning_trees"] = trees;
  doc["contiguous"] = spectrum.contiguous();
  emit(config, out, doc);
  return spectrum.contiguous() ? kOk : kCheckFailed;
}

int run_hist(const RunConfig& config, std::ostream& out) {
  const GraphPtr g = load_input(config);
  const auto hist = find_hist(g, config.budgets.search);
  json doc{{"exists", hist.has_value()}, {"locally_connected", is_locally_connected(*g)}};
  if (hist) doc.update(tree_json(*hist));
  emit(config, out, doc);
  return kOk;
}

int run_check_remark1(const RunConfig& config, std::ostream& out) {
  const GraphPtr g = load_input(config);
  if (config.trials <= 0) throw InvalidInput("--trials must be positive");
  const StemLeafReport r = check_stem_leaf_bound(*g, config.trials, config.seed);
  json doc{{"trials", r.trials},         {"seed", config.seed},         {"violations", r.violations},
           {"min_slack", r.min_slack},   {"max_slack", r.max_slack},    {"tight", r.tight}};
  emit(config, out, doc);
  return r.violations == 0 ? kOk : kCheckFailed;
}

int run_verify_counterexample(const RunConfig& config, std::ostream& out) {
  const Counterexample cex = gen_counterexample();
  const GraphPtr& g = cex.graph.graph;
  const LeafSpectrum oracle = leaf_spectrum_oracle(g, config.budgets.trees);

  int legal = 0;
  int non_decreasing = 0;
  for (const Edge& e_in : g->edges()) {
    if (cex.tree.contains(e_in)) continue;
    const auto cycle = fundamental_cycle(cex.tree, e_in);
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      ++legal;
      non_decreasing += exchange_step(cex.tree, e_in, cycle[i]).leaf_count() >= cex.tree.leaf_count();
    }
  }
  const auto search = monotone_sequence_search(*g, cex.tree, cex.max_leaf_tree, config.max_depth);

  const bool ok = cex.tree.leaf_count() == 5 && cex.max_leaf_tree.leaf_count() == 6 &&
                  oracle.max_leaves == 6 && legal > 0 && non_decreasing == 0 &&
                  search.status == SearchStatus::none_exists;
  json doc{{"leaves_T", cex.tree.leaf_count()},
           {"leaves_T_prime", cex.max_leaf_tree.leaf_count()},
           {"oracle_max_leaves", oracle.max_leaves},
           {"legal_exchanges_from_T", legal},
           {"non_decreasing_exchanges_from_T", non_decreasing},
           {"monotone_search", to_string(search.status)},
           {"trees_visited", search.trees_visited},
           {"ok", ok}};
  emit(config, out, doc);
  return ok ? kOk : kCheckFailed;
}

void error_record(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

std::int64_t parse_budget_env(const char* raw) {
  std::int64_t value = 0;
  const std::string text(raw);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value <= 0) {
    throw InvalidInput("LEAFSPAN_BUDGET must be a positive integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

Budgets default_budgets() {
  Budgets b;
  if (const char* raw = std::getenv("LEAFSPAN_BUDGET")) {
    const std::int64_t value = parse_budget_env(raw);
    b.trees = value;
    b.search = value;
  }
  return b;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.budgets.trees <= 0 || config.budgets.search <= 0) throw InvalidInput("budgets must be positive");
    switch (config.command) {
      case Command::gen:
        return run_gen(config, out);
      case Command::spectrum:
        return run_spectrum(config, out);
      case Command::interpolate:
        return run_interpolate(config, out);
      case Command::transform:
        return run_transform(config, out);
      case Command::oracle:
        return run_oracle(config, out);
      case Command::hist:
        return run_hist(config, out);
      case Command::check_remark1:
        return run_check_remark1(config, out);
      case Command::verify_counterexample:
        return run_verify_counterexample(config, out);
    }
    return kInputError;
  } catch (const BudgetExceeded& e) {
    error_record(err, "budget_exceeded", e.what());
    return kBudget;
  } catch (const Infeasible& e) {
    error_record(err, "infeasible", e.what());
    return kInfeasible;
  } catch (const InvalidInput& e) {
    error_record(err, "invalid_input", e.what());
    return kInputError;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config.budgets = default_budgets();
  } catch (const InvalidInput& e) {
    error_record(err, "invalid_input", e.what());
    return kInputError;
  }

  CLI::App app{"Spanning-tree leaf spectra: compute L(G), interpolate leaf counts, build exchange traces."};
  app.require_subcommand(1);

  auto add_io = [&config](CLI::App* sub, bool needs_input) {
    auto* opt = sub->add_option("-i,--input", config.input_path, "graph edge-list file");
    if (needs_input) opt->required();
    sub->add_option("-o,--output", config.output_path, "write the result here instead of stdout");
    sub->add_option("--budget", config.budgets.trees, "spanning-tree enumeration budget");
    sub->add_option("--search-budget", config.budgets.search, "backtracking node budget");
  };

  auto* gen = app.add_subcommand("gen", "generate a graph family");
  gen->add_option("family", config.family, "gk | counterexample | torus | platonic")
      ->required()
      ->check(CLI::IsMember({"gk", "counterexample", "torus", "platonic"}));
  gen->add_option("--k", config.k, "number of 4-cycles for gk");
  gen->add_option("--a", config.torus_a, "torus rows");
  gen->add_option("--b", config.torus_b, "torus columns");
  gen->add_option("--name", config.solid, "platonic solid")
      ->check(CLI::IsMember({"tetrahedron", "octahedron", "icosahedron"}));
  gen->add_option("-o,--output", config.output_path, "edge-list file (labels go to <file>.labels)");
  gen->add_option("--labels", config.labels_path, "label sidecar path");
  gen->add_flag("--verify-connectivity", config.verify_connectivity, "check the output is connected");
  gen->add_flag("--verify-4-connectivity", config.verify_4_connectivity, "check the output is 4-connected");
  gen->callback([&config] { config.command = Command::gen; });

  auto* spectrum = app.add_subcommand("spectrum", "exact min and max leaf counts");
  add_io(spectrum, true);
  spectrum->add_flag("--emit-witness", config.emit_witness, "include witness trees");
  spectrum->callback([&config] { config.command = Command::spectrum; });

  auto* interpolate = app.add_subcommand("interpolate", "spanning tree with exactly k leaves");
  add_io(interpolate, true);
  interpolate->add_option("--k", config.k, "target leaf count")->required();
  interpolate->add_flag("--emit-witness", config.emit_witness, "print the tree edges");
  interpolate->callback([&config] { config.command = Command::interpolate; });

  auto* transform = app.add_subcommand("transform", "exchange trace between two spanning trees");
  add_io(transform, true);
  transform->add_option("--tree-a", config.tree_a, "start tree file")->required();
  transform->add_option("--tree-b", config.tree_b, "target tree file")->required();
  transform->callback([&config] { config.command = Command::transform; });

  auto* oracle = app.add_subcommand("oracle", "exhaustive leaf spectrum over all spanning trees");
  add_io(oracle, true);
  oracle->add_flag("--emit-witness", config.emit_witness, "include a witness per leaf count");
  oracle->callback([&config] { config.command = Command::oracle; });

  auto* hist = app.add_subcommand("hist", "search for a spanning tree without degree-2 vertices");
  add_io(hist, true);
  hist->callback([&config] { config.command = Command::hist; });

  auto* remark = app.add_subcommand("check-remark1", "sample subtrees of a 6-regular graph, check leaves <= 2*stems+4");
  add_io(remark, true);
  remark->add_option("--trials", config.trials, "number of random subtrees");
  remark->add_option("--seed", config.seed, "random seed");
  remark->callback([&config] { config.command = Command::check_remark1; });

  auto* verify = app.add_subcommand("verify-counterexample", "re-check the monotonicity counterexample");
  add_io(verify, false);
  verify->add_option("--max-depth", config.max_depth, "monotone search depth");
  verify->callback([&config] { config.command = Command::verify_counterexample; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    error_record(err, "usage", e.what());
    return kInputError;
  }
  return run(config, out, err);
}

}  // namespace leafspan::cli
