#include "core/packing.hpp"

#include <algorithm>
#include <numeric>

namespace gp {

PackingState::PackingState(const Graph& h, const GuestFamily& f)
    : host(h), residual(h), owner(static_cast<size_t>(h.n) * h.n, -1) {
  embeddings.reserve(f.guests.size());
  for (const auto& g : f.guests) embeddings.emplace_back(g.graph.n, h.n);
}

void PackingState::own_edge(int u, int v, int s) {
  owner[static_cast<size_t>(u) * host.n + v] = s;
  owner[static_cast<size_t>(v) * host.n + u] = s;
  residual.remove_edge(u, v);
}

void PackingState::release_edge(int u, int v) {
  owner[static_cast<size_t>(u) * host.n + v] = -1;
  owner[static_cast<size_t>(v) * host.n + u] = -1;
  residual.add_edge(u, v);
}

void PackingState::place(const GuestGraph& g, int s, int x, int v) {
  PartialEmbedding& e = embeddings[static_cast<size_t>(s)];
  for (int y : g.graph.neighbor_list(x))
    if (e.mapped(y)) own_edge(v, e.at(y), s);
  e.set(x, v);
}

void PackingState::unplace(const GuestGraph& g, int s, int x) {
  PartialEmbedding& e = embeddings[static_cast<size_t>(s)];
  int v = e.at(x);
  e.unset(x);
  for (int y : g.graph.neighbor_list(x))
    if (e.mapped(y)) release_edge(v, e.at(y));
}

VerifyReport verify_packing(const PackingState& st, const GuestFamily& f, bool perfect) {
  VerifyReport rep;
  rep.host_edges = st.host.edge_count();
  int n = st.host.n;
  std::vector<int> cover(static_cast<size_t>(n) * n, -2);  // -2 untouched, else owning guest
  for (size_t s = 0; s < f.guests.size(); ++s) {
    const Graph& g = f.guests[s].graph;
    const PartialEmbedding& e = st.embeddings[s];
    // injectivity
    std::vector<int> seen(static_cast<size_t>(n), -1);
    for (int x = 0; x < g.n; ++x) {
      if (!e.mapped(x)) continue;
      int v = e.at(x);
      if (v < 0 || v >= n) {
        rep.fail("range", "guest " + std::to_string(s) + " vertex " + std::to_string(x));
        continue;
      }
      if (seen[static_cast<size_t>(v)] >= 0)
        rep.fail("injective", "guest " + std::to_string(s) + " host vertex " + std::to_string(v));
      seen[static_cast<size_t>(v)] = x;
    }
    // adjacency preservation and edge coverage
    for (auto [x, y] : g.edge_list()) {
      if (!e.mapped(x) || !e.mapped(y)) continue;
      int u = e.at(x), v = e.at(y);
      if (!st.host.has_edge(u, v)) {
        rep.fail("adjacency", "guest " + std::to_string(s) + " edge " + std::to_string(x) + "-" + std::to_string(y));
        continue;
      }
      int& c = cover[static_cast<size_t>(u) * n + v];
      if (c >= 0)
        rep.fail("edge double-used", "host edge " + std::to_string(u) + "-" + std::to_string(v) +
                                         " guests " + std::to_string(c) + "," + std::to_string(s));
      else {
        c = static_cast<int>(s);
        cover[static_cast<size_t>(v) * n + u] = static_cast<int>(s);
        ++rep.covered_edges;
      }
    }
  }
  // ledger consistency: owner matches recomputed coverage
  for (auto [u, v] : st.host.edge_list()) {
    int rec = cover[static_cast<size_t>(u) * n + v];
    if (rec == -2) rec = -1;
    if (st.owner_of(u, v) != rec)
      rep.fail("ledger", "host edge " + std::to_string(u) + "-" + std::to_string(v) + " owner " +
                             std::to_string(st.owner_of(u, v)) + " vs recomputed " + std::to_string(rec));
  }
  if (perfect) {
    for (auto [u, v] : st.host.edge_list())
      if (cover[static_cast<size_t>(u) * n + v] < 0) {
        rep.fail("perfect", "host edge " + std::to_string(u) + "-" + std::to_string(v) + " uncovered");
        break;
      }
  }
  return rep;
}

Graph leftover_graph(const PackingState& s) { return s.residual; }

namespace {

struct BtCtx {
  const GuestFamily& f;
  PackingState st;
  std::vector<int> guest_order;
  std::vector<std::vector<int>> vorder;  // per guest
  unsigned long long budget;
  unsigned long long nodes = 0;
  int max_depth = 0;
  bool exhausted = false;

  BtCtx(const GuestFamily& f_, const Graph& h, unsigned long long b)
      : f(f_), st(h, f_), budget(b) {}

  bool dfs(size_t gi, int vi, int depth) {
    if (gi == guest_order.size()) return true;
    int s = guest_order[gi];
    const GuestGraph& g = f.guests[static_cast<size_t>(s)];
    if (vi == g.graph.n) return dfs(gi + 1, 0, depth);
    int x = vorder[static_cast<size_t>(s)][static_cast<size_t>(vi)];
    PartialEmbedding& e = st.embeddings[static_cast<size_t>(s)];

    // candidates: common residual neighbours of embedded-neighbour images
    std::vector<int> nbr_imgs;
    for (int y : g.graph.neighbor_list(x))
      if (e.mapped(y)) nbr_imgs.push_back(e.at(y));
    Bits cand(st.host.n);
    if (nbr_imgs.empty()) cand.set_all();
    else {
      cand = st.residual.neighbors(nbr_imgs[0]);
      for (size_t i = 1; i < nbr_imgs.size(); ++i) cand &= st.residual.neighbors(nbr_imgs[i]);
    }
    cand.andnot(e.image);
    auto cands = cand.to_list();
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      int da = st.residual.degree(a), db = st.residual.degree(b);
      return da != db ? da < db : a < b;
    });
    for (int v : cands) {
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      max_depth = std::max(max_depth, depth);
      st.place(g, s, x, v);
      if (dfs(gi, vi + 1, depth + 1)) return true;
      st.unplace(g, s, x);
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

BacktrackResult backtrack_pack(const GuestFamily& f, const Graph& h, unsigned long long budget) {
  BtCtx ctx(f, h, budget);
  ctx.guest_order.resize(f.guests.size());
  std::iota(ctx.guest_order.begin(), ctx.guest_order.end(), 0);
  std::sort(ctx.guest_order.begin(), ctx.guest_order.end(), [&](int a, int b) {
    const auto& ga = f.guests[static_cast<size_t>(a)].graph;
    const auto& gb = f.guests[static_cast<size_t>(b)].graph;
    if (ga.edge_count() != gb.edge_count()) return ga.edge_count() > gb.edge_count();
    if (ga.n != gb.n) return ga.n > gb.n;
    return a < b;
  });
  ctx.vorder.resize(f.guests.size());
  for (size_t s = 0; s < f.guests.size(); ++s) {
    const auto& g = f.guests[s];
    ctx.vorder[s] = g.order.size() == static_cast<size_t>(g.graph.n) ? g.order
                                                                     : degeneracy_order(g.graph).first;
  }

  BacktrackResult res;
  bool found = ctx.dfs(0, 0, 0);
  res.nodes = ctx.nodes;
  res.max_depth = ctx.max_depth;
  if (found) {
    res.status = BacktrackStatus::Found;
    res.state = std::move(ctx.st);
  } else {
    res.status = ctx.exhausted ? BacktrackStatus::Exhausted : BacktrackStatus::Infeasible;
    res.state = std::move(ctx.st);
  }
  return res;
}

}  // namespace gp
