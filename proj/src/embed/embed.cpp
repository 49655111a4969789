#include "embed/embed.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace gp {

Bits candidate_set(const GuestGraph& g, const Graph& h, const PartialEmbedding& psi, int t) {
  const int gn = g.graph.n;
  if (t < 0 || t >= gn) throw SizeMismatch("candidate_set: vertex out of range");
  if (static_cast<int>(g.order.size()) != gn)
    throw SizeMismatch("candidate_set: order does not cover the guest");
  std::vector<int> pos(static_cast<size_t>(gn));
  for (int i = 0; i < gn; ++i) pos[static_cast<size_t>(g.order[static_cast<size_t>(i)])] = i;
  Bits c(h.n);
  c.set_all();
  for (int u : g.graph.neighbor_list(t)) {
    if (pos[static_cast<size_t>(u)] >= pos[static_cast<size_t>(t)]) continue;
    if (!psi.mapped(u))
      throw UnembeddedLeftNeighbour("candidate_set: left-neighbour " + std::to_string(u) +
                                    " of " + std::to_string(t) + " has no image");
    c &= h.adj[static_cast<size_t>(psi.at(u))];
  }
  return c;
}

EmbedResult random_embedding(const GuestGraph& g, const Graph& h, int t_star, Rng& rng,
                             std::vector<EmbedTraceEntry>* trace) {
  const int gn = g.graph.n;
  if (t_star < 0 || t_star > gn) throw SizeMismatch("random_embedding: t_star out of range");
  if (static_cast<int>(g.order.size()) != gn)
    throw SizeMismatch("random_embedding: order does not cover the guest");
  std::vector<int> pos(static_cast<size_t>(gn));
  for (int i = 0; i < gn; ++i) pos[static_cast<size_t>(g.order[static_cast<size_t>(i)])] = i;

  EmbedResult res;
  res.psi = PartialEmbedding(gn, h.n);
  for (int step = 0; step < t_star; ++step) {
    const int x = g.order[static_cast<size_t>(step)];
    Bits c(h.n);
    c.set_all();
    for (int u : g.graph.neighbor_list(x))
      if (pos[static_cast<size_t>(u)] < step)
        c &= h.adj[static_cast<size_t>(res.psi.at(u))];
    c.andnot(res.psi.image);
    std::vector<int> choice = c.to_list();
    if (choice.empty()) {
      res.failed_at = x;
      return res;
    }
    const int v = choice[static_cast<size_t>(rng.below(choice.size()))];
    if (trace) trace->push_back({x, static_cast<int>(choice.size()), v});
    res.psi.set(x, v);
  }
  return res;
}

PackProcessResult packing_process(const GuestFamily& f, const Graph& h0, Rng& rng, int retries,
                                  int t_star) {
  if (retries < 1) throw SizeMismatch("packing_process: retries must be positive");
  PackProcessResult out;
  out.state = PackingState(h0, f);
  out.leftovers.reserve(f.guests.size());
  out.densities.reserve(f.guests.size());
  const Rat denom(binom(h0.n, 2));
  for (size_t s = 0; s < f.guests.size(); ++s) {
    const GuestGraph& g = f.guests[s];
    const int ts = t_star < 0 ? g.graph.n : std::min(t_star, g.graph.n);
    EmbedResult r;
    int attempt = 0;
    while (attempt < retries) {
      ++attempt;
      r = random_embedding(g, out.state.residual, ts, rng);
      if (r.ok()) break;
    }
    if (!r.ok()) {
      out.ok = false;
      out.failed_guest = static_cast<int>(s);
      out.attempts = attempt;
      return out;
    }
    for (int step = 0; step < ts; ++step) {
      const int x = g.order[static_cast<size_t>(step)];
      out.state.place(g, static_cast<int>(s), x, r.psi.at(x));
    }
    out.leftovers.push_back(out.state.residual);
    out.densities.push_back(denom == 0 ? Rat(0) : Rat(out.state.residual.m) / denom);
  }
  out.ok = true;
  return out;
}

}  // namespace gp
