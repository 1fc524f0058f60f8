#pragma once

#include <stdexcept>
#include <string>

namespace leafspan {

/// Malformed input: bad vertex index, loop, non-tree edge set, wrong host.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search or enumeration ran past its configured budget. The answer is
/// unknown, not negative.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested value lies outside what the graph admits (e.g. k not in L(G)).
class Infeasible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace leafspan
