#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace leafspan::testing {

std::int64_t kirchhoff_tree_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  const int d = n - 1;  // delete row/column 0
  std::vector<std::vector<__int128>> a(d, std::vector<__int128>(d, 0));
  for (const Edge& e : g.edges()) {
    const int u = e.u - 1;
    const int v = e.v - 1;
    if (u >= 0) a[u][u] += 1;
    if (v >= 0) a[v][v] += 1;
    if (u >= 0 && v >= 0) {
      a[u][v] -= 1;
      a[v][u] -= 1;
    }
  }
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < d; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < d; ++r) {
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < d; ++i) {
      for (int j = k + 1; j < d; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return static_cast<std::int64_t>(sign * a[d - 1][d - 1]);
}

namespace {

bool connected_without(const Graph& g, std::uint32_t removed) {
  const int n = g.vertex_count();
  int start = -1;
  int total = 0;
  for (int v = 0; v < n; ++v) {
    if (!(removed >> v & 1U)) {
      ++total;
      if (start < 0) start = v;
    }
  }
  if (total <= 1) return true;
  std::vector<bool> seen(n, false);
  std::function<int(int)> dfs = [&](int v) {
    seen[v] = true;
    int count = 1;
    for (Vertex w : g.neighbors(v)) {
      if (!(removed >> w & 1U) && !seen[w]) count += dfs(w);
    }
    return count;
  };
  return dfs(start) == total;
}

}  // namespace

int brute_force_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute-force connectivity is for small graphs");
  for (int size = 0; size < n - 1; ++size) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != size) continue;
      if (!connected_without(g, mask)) return size;
    }
  }
  return std::max(0, n - 1);
}

bool is_spanning_tree_of(const Graph& g, std::span<const Edge> edges) {
  const int n = g.vertex_count();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  // n - 1 edges and connected: a tree.
  return reached == n;
}

std::vector<std::vector<Edge>> brute_force_spanning_trees(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 30) throw std::invalid_argument("bitmask scan is for small edge counts");
  std::vector<std::vector<Edge>> trees;
  std::vector<Edge> chosen;
  std::function<void(int)> pick = [&](int from) {
    if (static_cast<int>(chosen.size()) == n - 1) {
      if (is_spanning_tree_of(g, chosen)) trees.push_back(chosen);
      return;
    }
    for (int i = from; i < m; ++i) {
      if (m - i < n - 1 - static_cast<int>(chosen.size())) break;
      chosen.push_back(g.edges()[i]);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return trees;
}

int count_leaves(int n, std::span<const Edge> edges) {
  std::vector<int> deg(n, 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

std::set<int> brute_force_leaf_set(const Graph& g) {
  std::set<int> out;
  for (const auto& t : brute_force_spanning_trees(g)) out.insert(count_leaves(g.vertex_count(), t));
  return out;
}

int brute_force_connected_domination(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20) throw std::invalid_argument("brute-force domination is for small graphs");
  int best = n;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    bool dominates = true;
    for (int v = 0; v < n && dominates; ++v) {
      if (mask >> v & 1U) continue;
      bool hit = false;
      for (Vertex w : g.neighbors(v)) hit = hit || (mask >> w & 1U);
      dominates = hit;
    }
    if (dominates && connected_without(g, ~mask & ((1U << n) - 1))) best = size;
  }
  return best;
}

std::vector<Vertex> dfs_tree_path(int n, std::span<const Edge> edges, Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<Vertex> path;
  std::function<bool(Vertex, Vertex)> dfs = [&](Vertex v, Vertex from) {
    path.push_back(v);
    if (v == b) return true;
    for (Vertex w : adj[v]) {
      if (w != from && dfs(w, v)) return true;
    }
    path.pop_back();
    return false;
  };
  dfs(a, -1);
  return path;
}

}  // namespace leafspan::testing
