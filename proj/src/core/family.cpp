#include "core/family.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"

namespace gp {

std::string class_tag_name(ClassTag t) {
  switch (t) {
    case ClassTag::K: return "K";
    case ClassTag::J0: return "J0";
    case ClassTag::J1: return "J1";
    case ClassTag::J2: return "J2";
    default: return "other";
  }
}

ClassTag class_tag_parse(const std::string& s) {
  if (s == "K") return ClassTag::K;
  if (s == "J0") return ClassTag::J0;
  if (s == "J1") return ClassTag::J1;
  if (s == "J2") return ClassTag::J2;
  if (s == "other") return ClassTag::Other;
  throw ParseError("unknown class tag '" + s + "'");
}

void GuestGraph::refresh_order() {
  auto [ord, deg] = degeneracy_order(graph);
  order = std::move(ord);
  degeneracy = deg;
}

std::vector<int> GuestFamily::J() const {
  std::vector<int> j;
  j.insert(j.end(), J0.begin(), J0.end());
  j.insert(j.end(), J1.begin(), J1.end());
  j.insert(j.end(), J2.begin(), J2.end());
  std::sort(j.begin(), j.end());
  return j;
}

std::pair<std::vector<int>, int> degeneracy_order(const Graph& g) {
  int n = g.n;
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<char> gone(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  std::vector<int> removal;
  removal.reserve(static_cast<size_t>(n));
  int D = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[static_cast<size_t>(v)] && (best < 0 || deg[static_cast<size_t>(v)] < deg[static_cast<size_t>(best)]))
        best = v;
    D = std::max(D, deg[static_cast<size_t>(best)]);
    gone[static_cast<size_t>(best)] = 1;
    removal.push_back(best);
    for (int u : g.neighbor_list(best))
      if (!gone[static_cast<size_t>(u)]) --deg[static_cast<size_t>(u)];
  }
  std::reverse(removal.begin(), removal.end());
  return {removal, D};
}

std::vector<std::vector<int>> find_bare_paths(const GuestGraph& t, int length, int count) {
  const Graph& g = t.graph;
  if (g.n == 0) return {};
  if (g.edge_count() != g.n - 1 || !g.connected()) throw NotATree("need a connected acyclic guest");
  if (length < 1 || count <= 0) return {};

  // keep only edges whose both endpoints have degree exactly 2
  Graph h(g.n);
  for (auto [u, v] : g.edge_list())
    if (g.degree(u) == 2 && g.degree(v) == 2) h.add_edge(u, v);

  // components of h are paths; keep those with >= 50 vertices, slice windows
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(g.n), 0);
  for (int v = 0; v < g.n && static_cast<int>(out.size()) < count; ++v) {
    if (seen[static_cast<size_t>(v)] || h.degree(v) == 0) continue;
    // collect the component by walking from an endpoint
    std::vector<int> comp_probe = {v};
    seen[static_cast<size_t>(v)] = 1;
    std::vector<int> stack = {v};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : h.neighbor_list(x))
        if (!seen[static_cast<size_t>(u)]) {
          seen[static_cast<size_t>(u)] = 1;
          comp_probe.push_back(u);
          stack.push_back(u);
        }
    }
    if (static_cast<int>(comp_probe.size()) < 50) continue;
    int end = -1;
    for (int x : comp_probe)
      if (h.degree(x) == 1 && (end < 0 || x < end)) end = x;
    if (end < 0) continue;  // cycle cannot occur in a tree
    std::vector<int> path;
    int prev = -1, cur = end;
    while (cur >= 0) {
      path.push_back(cur);
      int nxt = -1;
      for (int u : h.neighbor_list(cur))
        if (u != prev) nxt = u;
      prev = cur;
      cur = nxt;
    }
    for (size_t i = 0; i + static_cast<size_t>(length) < path.size() && static_cast<int>(out.size()) < count;
         i += static_cast<size_t>(length) + 1)
      out.emplace_back(path.begin() + static_cast<long>(i), path.begin() + static_cast<long>(i) + length + 1);
  }
  return out;
}

static bool is_bare_path(const GuestGraph& g, const std::vector<int>& p) {
  if (p.size() < 2) return false;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (!g.graph.has_edge(p[i], p[i + 1])) return false;
  for (size_t i = 1; i + 1 < p.size(); ++i)
    if (g.graph.degree(p[i]) != 2) return false;
  return true;
}

ClassReport classify_family(const GuestFamily& f, long long m_budget) {
  ClassReport rep;
  const Config& cf = f.params;
  long long n = cf.n;
  if (m_budget < 0) m_budget = n * (n - 1) / 2;
  const Rat alpha = cf.lambda;  // packing-class slack parameter, instantiated as lambda
  long long alpha_n = cf.lambda_n();

  // index partition sanity
  std::vector<char> tagc(f.guests.size(), 0);
  auto mark = [&](const std::vector<int>& idx, const char* name) {
    for (int s : idx) {
      if (s < 0 || s >= static_cast<int>(f.guests.size())) {
        rep.fail("index-partition", std::string(name) + " has out-of-range guest " + std::to_string(s));
        continue;
      }
      if (tagc[static_cast<size_t>(s)]++)
        rep.fail("index-partition", "guest " + std::to_string(s) + " in two classes");
    }
  };
  mark(f.K, "K");
  mark(f.J0, "J0");
  mark(f.J1, "J1");
  mark(f.J2, "J2");

  auto J = f.J();
  double cn_over_log = n > 2 ? to_double(cf.c) * static_cast<double>(n) / std::log(static_cast<double>(n)) : -1;

  long long edge_sum = 0, odd_sum = 0;
  for (size_t si = 0; si < f.guests.size(); ++si) {
    const GuestGraph& g = f.guests[si];
    std::string tag = "guest " + std::to_string(si);
    edge_sum += g.graph.edge_count();
    // (a): order, max degree, degeneracy
    if (g.graph.n > n) rep.fail("(a) order", tag + " has " + std::to_string(g.graph.n) + " > n vertices");
    if (n > 2) {
      for (int v = 0; v < g.graph.n; ++v)
        if (static_cast<double>(g.graph.degree(v)) > cn_over_log) {
          rep.fail("(a) max-degree", tag + " vertex " + std::to_string(v));
          break;
        }
    }
    if (degeneracy_order(g.graph).second > cf.D) rep.fail("(a) degeneracy", tag);
  }
  // (b)
  if (edge_sum > m_budget)
    rep.fail("(b) edge-budget", std::to_string(edge_sum) + " > " + std::to_string(m_budget));
  // |J| >= alpha*n
  if (static_cast<long long>(J.size()) < alpha_n)
    rep.fail("|J| >= alpha*n", std::to_string(J.size()) + " < " + std::to_string(alpha_n));

  // (c): orders of J u K guests
  Rat order_cap = (Rat(1) - alpha) * Rat(n);
  auto check_order = [&](int s) {
    if (Rat(f.guests[static_cast<size_t>(s)].graph.n) > order_cap)
      rep.fail("(c) order", "guest " + std::to_string(s));
  };
  for (int s : J) check_order(s);
  for (int s : f.K) check_order(s);

  // (d): bare paths for J-guests
  for (int s : J) {
    const GuestGraph& g = f.guests[static_cast<size_t>(s)];
    std::string tag = "guest " + std::to_string(s);
    if (static_cast<long long>(g.bare_paths.size()) != alpha_n) {
      rep.fail("(d) path-count", tag + " has " + std::to_string(g.bare_paths.size()) + " paths, want " + std::to_string(alpha_n));
      continue;
    }
    std::vector<char> used(static_cast<size_t>(g.graph.n), 0);
    for (const auto& p : g.bare_paths) {
      if (p.size() != 12) {
        rep.fail("(d) path-length", tag);
        break;
      }
      if (!is_bare_path(g, p)) {
        rep.fail("(d) bare", tag);
        break;
      }
      bool overlap = false;
      for (int v : p) {
        if (used[static_cast<size_t>(v)]) overlap = true;
        used[static_cast<size_t>(v)] = 1;
      }
      if (overlap) {
        rep.fail("(d) disjoint", tag);
        break;
      }
    }
  }

  // (e): odd vertices for K-guests
  if (cf.D_odd % 2 == 0 || cf.D_odd > cf.D)
    rep.fail("(e) D_odd", "D_odd=" + std::to_string(cf.D_odd) + " vs D=" + std::to_string(cf.D));
  for (int s : f.K) {
    const GuestGraph& g = f.guests[static_cast<size_t>(s)];
    std::string tag = "guest " + std::to_string(s);
    if (g.odd_vertices.empty()) rep.fail("(e) non-empty", tag);
    for (size_t i = 0; i < g.odd_vertices.size(); ++i) {
      int u = g.odd_vertices[i];
      if (g.graph.degree(u) != cf.D_odd) {
        rep.fail("(e) degree", tag + " vertex " + std::to_string(u));
        break;
      }
      for (size_t j = i + 1; j < g.odd_vertices.size(); ++j)
        if (g.graph.has_edge(u, g.odd_vertices[j])) {
          rep.fail("(e) independent set", tag + " edge " + std::to_string(u) + "-" + std::to_string(g.odd_vertices[j]));
          i = g.odd_vertices.size();
          break;
        }
    }
    if (n > 2 && static_cast<double>(g.odd_vertices.size()) > cn_over_log)
      rep.fail("(e) size", tag);
    odd_sum += static_cast<long long>(g.odd_vertices.size());
  }
  Rat odd_floor = (Rat(1) + alpha) * Rat(n);
  if (Rat(odd_sum) < odd_floor)
    rep.fail("(e) odd-total", std::to_string(odd_sum) + " < (1+alpha)n");

  return rep;
}

}  // namespace gp
