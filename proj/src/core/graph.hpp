#pragma once
#include <utility>
#include <vector>

#include "core/bits.hpp"

namespace gp {

// simple undirected graph on vertices 0..n-1, value semantics
struct Graph {
  int n = 0;
  std::vector<Bits> adj;
  int m = 0;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(static_cast<size_t>(n_), Bits(n_)) {}
  Graph(int n_, const std::vector<std::pair<int, int>>& edges) : Graph(n_) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  bool has_edge(int u, int v) const { return u != v && adj[static_cast<size_t>(u)].test(v); }

  // idempotent, ignores loops
  void add_edge(int u, int v) {
    if (u == v || has_edge(u, v)) return;
    adj[static_cast<size_t>(u)].set(v);
    adj[static_cast<size_t>(v)].set(u);
    ++m;
  }

  void remove_edge(int u, int v) {
    if (!has_edge(u, v)) return;
    adj[static_cast<size_t>(u)].reset(v);
    adj[static_cast<size_t>(v)].reset(u);
    --m;
  }

  int degree(int v) const { return adj[static_cast<size_t>(v)].count(); }
  int edge_count() const { return m; }
  const Bits& neighbors(int v) const { return adj[static_cast<size_t>(v)]; }

  std::vector<int> neighbor_list(int v) const { return adj[static_cast<size_t>(v)].to_list(); }

  // common neighbourhood of a set; N(empty) = V(H)
  Bits common_neighbors(const std::vector<int>& s) const {
    Bits b(n);
    b.set_all();
    for (int v : s) b &= adj[static_cast<size_t>(v)];
    return b;
  }

  // lexicographically sorted edge list, u < v
  std::vector<std::pair<int, int>> edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(m));
    for (int u = 0; u < n; ++u)
      for (int v : adj[static_cast<size_t>(u)].to_list())
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  static Graph complete(int n_) {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) g.add_edge(u, v);
    return g;
  }

  static Graph path(int n_) {
    Graph g(n_);
    for (int v = 0; v + 1 < n_; ++v) g.add_edge(v, v + 1);
    return g;
  }

  // edges within a vertex subset
  int edges_within(const Bits& s) const {
    int c = 0;
    for (int v : s.to_list()) c += adj[static_cast<size_t>(v)].and_count(s);
    return c / 2;
  }

  // edges between two disjoint vertex subsets
  int edges_between(const Bits& s, const Bits& t) const {
    int c = 0;
    for (int v : s.to_list()) c += adj[static_cast<size_t>(v)].and_count(t);
    return c;
  }

  bool connected() const {
    if (n == 0) return true;
    std::vector<int> stack = {0};
    Bits seen(n);
    seen.set(0);
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : neighbor_list(v))
        if (!seen.test(u)) {
          seen.set(u);
          ++cnt;
          stack.push_back(u);
        }
    }
    return cnt == n;
  }
};

}  // namespace gp
