#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "leafspan/spectrum.hpp"

namespace leafspan::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,  ///< bad arguments, unreadable or malformed files
  kInfeasible = 2,  ///< requested k outside L(G)
  kBudget = 3,      ///< a search ran out of budget; the answer is unknown
  kCheckFailed = 4, ///< a verification subcommand found a violated claim
};

enum class Command {
  gen,
  spectrum,
  interpolate,
  transform,
  oracle,
  hist,
  check_remark1,
  verify_counterexample,
};

struct RunConfig {
  Command command = Command::spectrum;
  std::string family;        ///< gen: gk | counterexample | torus | platonic
  std::optional<std::string> input_path;
  std::optional<std::string> output_path;
  std::optional<std::string> labels_path;
  std::optional<std::string> tree_a;
  std::optional<std::string> tree_b;
  std::optional<int> k;
  int torus_a = 5;
  int torus_b = 5;
  std::string solid = "octahedron";
  Budgets budgets;
  std::int64_t trials = 10'000;
  std::uint64_t seed = 1;
  int max_depth = 6;
  bool verify_connectivity = false;
  bool verify_4_connectivity = false;
  bool emit_witness = false;
};

/// Default budgets, honoring LEAFSPAN_BUDGET when set to a positive integer.
/// Throws InvalidInput on any other value.
Budgets default_budgets();

/// Executes one command. Results go to `out` (or the output file), error
/// records as one-line JSON to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv-style arguments (without the program name) and runs them.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace leafspan::cli
