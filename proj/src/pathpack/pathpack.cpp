#include "pathpack/pathpack.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "core/error.hpp"

namespace gp {
namespace {

using u128 = unsigned __int128;

template <class F>
void for_each_in(const Bits& a, F f) {
  for (size_t wi = 0; wi < a.w.size(); ++wi) {
    uint64_t m = a.w[wi];
    while (m) {
      f(static_cast<int>(wi * 64 + std::countr_zero(m)));
      m &= m - 1;
    }
  }
}

template <class F>
void for_each_common(const Bits& a, const Bits& b, F f) {
  size_t nw = std::min(a.w.size(), b.w.size());
  for (size_t wi = 0; wi < nw; ++wi) {
    uint64_t m = a.w[wi] & b.w[wi];
    while (m) {
      f(static_cast<int>(wi * 64 + std::countr_zero(m)));
      m &= m - 1;
    }
  }
}

u128 rand_below(Rng& rng, u128 bound) {
  if (bound <= static_cast<u128>(UINT64_MAX)) return rng.below(static_cast<uint64_t>(bound));
  u128 lim = ~static_cast<u128>(0) - ~static_cast<u128>(0) % bound;
  for (;;) {
    u128 x = (static_cast<u128>(rng.next()) << 64) | rng.next();
    if (x < lim) return x % bound;
  }
}

Int rand_below(Rng& rng, const Int& bound) {
  if (bound <= Int(UINT64_MAX)) return Int(rng.below(bound.convert_to<uint64_t>()));
  unsigned bits = msb(bound) + 1;
  unsigned words = (bits + 63) / 64;
  for (;;) {
    Int x = 0;
    for (unsigned i = 0; i < words; ++i) x = (x << 64) | Int(rng.next());
    x &= (Int(1) << bits) - 1;
    if (x < bound) return x;
  }
}

// w[i][v] = number of pattern-respecting v1-vk walks that stand on v at slot
// i, repeats allowed; exact counts keep the draw uniform
template <class Num>
Num fill_walk_counts(const Graph& h, const std::vector<Bits>& allowed, int v1, int vk,
                     std::vector<std::vector<Num>>& w) {
  int k = static_cast<int>(allowed.size());
  w.assign(k, std::vector<Num>(h.n, Num(0)));
  w[k - 1][vk] = Num(1);
  for (int i = k - 2; i >= 0; --i)
    for_each_in(allowed[i], [&](int v) {
      Num acc(0);
      for_each_common(h.adj[v], allowed[i + 1], [&](int u) { acc += w[i + 1][u]; });
      w[i][v] = acc;
    });
  return w[0][v1];
}

template <class Num>
std::vector<int> sample_walk(const Graph& h, const std::vector<Bits>& allowed, int v1,
                             const std::vector<std::vector<Num>>& w, Rng& rng) {
  int k = static_cast<int>(allowed.size());
  std::vector<int> walk{v1};
  int v = v1;
  for (int i = 0; i + 1 < k; ++i) {
    Num r = rand_below(rng, w[i][v]);
    int chosen = -1;
    for_each_common(h.adj[v], allowed[i + 1], [&](int u) {
      if (chosen >= 0) return;
      const Num& c = w[i + 1][u];
      if (r < c)
        chosen = u;
      else
        r -= c;
    });
    v = chosen;
    walk.push_back(v);
  }
  return walk;
}

// exhaustive enumeration; the kept path is replaced with probability 1/found,
// so it ends up uniform over everything enumerated
template <class Num>
struct DfsSampler {
  const Graph& h;
  const std::vector<Bits>& allowed;
  const std::vector<std::vector<Num>>& w;
  Rng& rng;
  std::vector<char> on_path;
  std::vector<int> cur, kept;
  long long found = 0;

  void run(int v, int i) {
    if (i + 1 == static_cast<int>(allowed.size())) {
      ++found;
      if (rng.below(static_cast<uint64_t>(found)) == 0) kept = cur;
      return;
    }
    for_each_common(h.adj[v], allowed[i + 1], [&](int u) {
      if (on_path[u] || w[i + 1][u] == Num(0)) return;
      on_path[u] = 1;
      cur.push_back(u);
      run(u, i + 1);
      cur.pop_back();
      on_path[u] = 0;
    });
  }
};

template <class Num>
std::optional<std::vector<int>> sample_with(const Graph& h, const std::vector<Bits>& allowed,
                                            int v1, int vk, Rng& rng, int retries) {
  std::vector<std::vector<Num>> w;
  if (fill_walk_counts<Num>(h, allowed, v1, vk, w) == Num(0)) return std::nullopt;
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<int> walk = sample_walk<Num>(h, allowed, v1, w, rng);
    bool simple = true;
    for (size_t i = 0; i < walk.size() && simple; ++i)
      for (size_t j = i + 1; j < walk.size(); ++j)
        if (walk[i] == walk[j]) {
          simple = false;
          break;
        }
    if (simple) return walk;
  }
  DfsSampler<Num> dfs{h, allowed, w, rng, std::vector<char>(h.n, 0), {}, {}, 0};
  dfs.on_path[v1] = 1;
  dfs.cur.push_back(v1);
  dfs.run(v1, 0);
  if (dfs.found == 0) return std::nullopt;
  return dfs.kept;
}

void count_paths(PathStats& st, const std::vector<std::vector<int>>& host_paths) {
  for (const std::vector<int>& hp : host_paths) {
    for (int v : hp) {
      if (v >= static_cast<int>(st.vertex_uses.size())) st.vertex_uses.resize(v + 1, 0);
      ++st.vertex_uses[v];
    }
    for (size_t i = 0; i + 1 < hp.size(); ++i) {
      int u = hp[i], v = hp[i + 1];
      if (u > v) std::swap(u, v);
      ++st.edge_uses[{u, v}];
    }
  }
}

}  // namespace

std::optional<std::vector<int>> sample_consistent_path(const Graph& h, const Bits& used, int v1,
                                                       int vk, const std::vector<int>& pattern,
                                                       const SidePartition& sides, Rng& rng,
                                                       int retries) {
  int n = h.n;
  int k = static_cast<int>(pattern.size());
  if (k < 2) throw SizeMismatch("pattern needs at least two slots");
  if (used.n != n || sides.minus.n != n || sides.plus.n != n)
    throw SizeMismatch("vertex sets do not match the host");
  if (v1 < 0 || v1 >= n || vk < 0 || vk >= n) throw SizeMismatch("endpoint out of range");
  for (int side : pattern)
    if (side < -1 || side > 1) throw MalformedBundle("pattern entry is not a side");
  if (retries < 0) throw SizeMismatch("retries must be nonnegative");
  if (v1 == vk || k > n) return std::nullopt;

  std::vector<Bits> allowed(k, Bits(n));
  allowed[0].set(v1);
  allowed[k - 1].set(vk);
  for (int i = 1; i + 1 < k; ++i) {
    Bits& a = allowed[i];
    if (pattern[i] == 0)
      a = sides.minus;
    else if (pattern[i] == 1)
      a = sides.plus;
    else
      a.set_all();
    a.andnot(used);
    a.reset(v1);
    a.reset(vk);
  }

  // walk counts are below n^(k-2); fall back to big integers past 128 bits
  unsigned per = std::bit_width(static_cast<unsigned>(n));
  if (static_cast<unsigned>(k - 2) * per <= 120)
    return sample_with<u128>(h, allowed, v1, vk, rng, retries);
  return sample_with<Int>(h, allowed, v1, vk, rng, retries);
}

PathEmbedResult random_path_embedding(const AnchoredPathForest& f, const Graph& h, Rng& rng,
                                      int retries) {
  std::string defect = f.validate();
  if (!defect.empty()) throw MalformedBundle(defect);
  if (f.used.n != h.n || f.sides.minus.n != h.n || f.sides.plus.n != h.n)
    throw SizeMismatch("forest universe does not match the host");

  int t_star = static_cast<int>(f.paths.size());
  std::vector<int> order(t_star);
  std::iota(order.begin(), order.end(), 0);
  rng.shuffle(order);

  PathEmbedResult out;
  out.host_paths.resize(t_star);
  Bits used_now = f.used;
  for (int t : order) {
    const PathSpec& ps = f.paths[t];
    auto p = sample_consistent_path(h, used_now, ps.head_host, ps.tail_host, ps.xi, f.sides, rng,
                                    retries);
    if (!p) {
      out.failed_at = t;
      out.host_paths.clear();
      return out;
    }
    for (size_t i = 1; i + 1 < p->size(); ++i) used_now.set((*p)[i]);
    out.host_paths[t] = std::move(*p);
  }
  return out;
}

SideDensities side_densities(const Graph& h, const SidePartition& sides) {
  long long sm = sides.minus.count(), sp = sides.plus.count();
  SideDensities d;
  d.mm = sm >= 2 ? Rat(h.edges_within(sides.minus)) / Rat(binom(sm, 2)) : Rat(0);
  d.pp = sp >= 2 ? Rat(h.edges_within(sides.plus)) / Rat(binom(sp, 2)) : Rat(0);
  d.mp = sm > 0 && sp > 0
             ? Rat(h.edges_between(sides.minus, sides.plus)) / (Rat(sm) * Rat(sp))
             : Rat(0);
  return d;
}

SideDensities leftover_density_prediction(const Graph& h0, const SidePartition& sides,
                                          const std::vector<AnchoredPathForest>& forests) {
  long long fmm = 0, fpp = 0, fmp = 0;
  for (const AnchoredPathForest& f : forests)
    for (const PathSpec& ps : f.paths)
      for (size_t i = 0; i + 1 < ps.xi.size(); ++i) {
        int a = ps.xi[i], b = ps.xi[i + 1];
        if (a == 0 && b == 0)
          ++fmm;
        else if (a == 1 && b == 1)
          ++fpp;
        else
          ++fmp;
      }
  long long sm = sides.minus.count(), sp = sides.plus.count();
  SideDensities d;
  d.mm = sm >= 2 ? Rat(h0.edges_within(sides.minus) - fmm) / Rat(binom(sm, 2)) : Rat(0);
  d.pp = sp >= 2 ? Rat(h0.edges_within(sides.plus) - fpp) / Rat(binom(sp, 2)) : Rat(0);
  d.mp = sm > 0 && sp > 0
             ? Rat(h0.edges_between(sides.minus, sides.plus) - fmp) / (Rat(sm) * Rat(sp))
             : Rat(0);
  return d;
}

PathPackResult path_packing(const std::vector<AnchoredPathForest>& forests, const Graph& h0,
                            Rng& rng, int retries) {
  if (forests.empty()) throw MalformedBundle("no path-forests to pack");
  if (retries < 1) throw SizeMismatch("retries must be positive");
  for (size_t s = 0; s < forests.size(); ++s) {
    std::string defect = forests[s].validate();
    if (!defect.empty()) throw MalformedBundle("forest " + std::to_string(s) + ": " + defect);
    if (forests[s].used.n != h0.n) throw SizeMismatch("forest universe does not match the host");
    if (!(forests[s].sides.minus == forests[0].sides.minus) ||
        !(forests[s].sides.plus == forests[0].sides.plus))
      throw MalformedBundle("forests disagree on the side partition");
  }
  const SidePartition& sides = forests[0].sides;
  if (sides.minus.n != h0.n || sides.plus.n != h0.n)
    throw SizeMismatch("side partition does not match the host");

  int s_star = static_cast<int>(forests.size());
  PathPackResult out;
  out.predicted = leftover_density_prediction(h0, sides, forests);
  for (int attempt = 1; attempt <= retries; ++attempt) {
    out.attempts = attempt;
    std::vector<int> order(s_star);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    Graph residual = h0;
    out.host_paths.assign(s_star, {});
    bool stuck = false;
    for (int s : order) {
      PathEmbedResult r = random_path_embedding(forests[s], residual, rng, retries);
      if (!r.ok()) {
        out.failed_forest = s;
        out.failed_component = r.failed_at;
        stuck = true;
        break;
      }
      for (const std::vector<int>& hp : r.host_paths)
        for (size_t i = 0; i + 1 < hp.size(); ++i) residual.remove_edge(hp[i], hp[i + 1]);
      out.host_paths[s] = std::move(r.host_paths);
    }
    if (!stuck) {
      out.ok = true;
      out.failed_forest = out.failed_component = -1;
      out.leftover = std::move(residual);
      out.actual = side_densities(out.leftover, sides);
      return out;
    }
  }
  out.host_paths.clear();
  return out;
}

void PathStats::add_trial(const std::vector<std::vector<int>>& host_paths) {
  count_paths(*this, host_paths);
  ++trials;
}

void PathStats::add_pack_trial(const std::vector<std::vector<std::vector<int>>>& host_paths) {
  for (const auto& f : host_paths) count_paths(*this, f);
  ++trials;
}

void PathStats::merge(const PathStats& other) {
  n = std::max(n, other.n);
  trials += other.trials;
  if (vertex_uses.size() < other.vertex_uses.size())
    vertex_uses.resize(other.vertex_uses.size(), 0);
  for (size_t v = 0; v < other.vertex_uses.size(); ++v) vertex_uses[v] += other.vertex_uses[v];
  for (const auto& [e, c] : other.edge_uses) edge_uses[e] += c;
}

Json PathStats::to_json() const {
  Json j;
  j["trials"] = trials;
  j["vertices"] = vertex_uses;
  Json edges = Json::array();
  for (const auto& [e, c] : edge_uses) edges.push_back({e.first, e.second, c});
  j["edges"] = edges;
  return j;
}

}  // namespace gp
