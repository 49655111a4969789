#include "quasirandom/audits.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "quasirandom/audit_internal.hpp"

namespace gp {

using namespace detail;

AuditReport audit_quasirandom(const Graph& h, const Rat& gamma, int L, long long budget,
                              uint64_t seed) {
  if (L < 1) throw SizeMismatch("audit_quasirandom: L must be at least 1");
  if (h.m == 0 || h.n < 2) throw ZeroDensity("audit_quasirandom: host has no edges");
  AuditReport rep;
  rep.definition = "quasirandom";
  rep.gamma = gamma;
  rep.L = L;
  const int n = h.n;
  const Rat p = Rat(h.m) / Rat(binom(n, 2));

  auto eval = [&](const std::vector<int>& s) {
    long long actual = h.common_neighbors(s).count();
    Rat expected = rat_pow(p, static_cast<unsigned>(s.size())) * n;
    Json wit;
    wit["S"] = vec_json(s);
    absorb_tuple(rep, actual, expected, std::move(wit));
  };

  ModePlan mp = plan_mode(subsets_up_to(n, L), budget);
  rep.mode = mp.name;
  if (mp.exhaustive) {
    for_each_subset(n, L, eval);
  } else {
    Rng rng(seed);
    for (long long i = 0; i < mp.samples; ++i) eval(sample_subset(rng, n, L));
  }
  rep.finalize();
  return rep;
}

AuditReport audit_diet(const Graph& h, const std::vector<int>& x, const Rat& gamma, int L,
                       long long budget, uint64_t seed) {
  const int n = h.n;
  Bits xb(n);
  for (int v : x) {
    if (v < 0 || v >= n) throw SizeMismatch("audit_diet: excluded vertex out of range");
    xb.set(v);
  }
  if (xb.count() >= n) throw SizeMismatch("audit_diet: excluded set covers the host");
  if (h.m == 0 || n < 2) throw ZeroDensity("audit_diet: host has no edges");
  AuditReport rep;
  rep.definition = "diet";
  rep.gamma = gamma;
  rep.L = L;
  const Rat p = Rat(h.m) / Rat(binom(n, 2));
  const long long outside = n - xb.count();

  auto eval = [&](const std::vector<int>& s) {
    long long actual = h.common_neighbors(s).andnot_count(xb);
    Rat expected = rat_pow(p, static_cast<unsigned>(s.size())) * outside;
    Json wit;
    wit["S"] = vec_json(s);
    absorb_tuple(rep, actual, expected, std::move(wit));
  };

  ModePlan mp = plan_mode(subsets_up_to(n, L), budget);
  rep.mode = mp.name;
  if (mp.exhaustive) {
    for_each_subset(n, L, eval);
  } else {
    Rng rng(seed);
    for (long long i = 0; i < mp.samples; ++i) eval(sample_subset(rng, n, L));
  }
  rep.finalize();
  return rep;
}

AuditReport audit_block_diet(const Graph& h, const Bits& vminus, const Bits& vplus, const Bits& u,
                             const Rat& gamma, int L, long long budget, uint64_t seed) {
  const int n = h.n;
  if (vminus.n != n || vplus.n != n || u.n != n)
    throw SizeMismatch("audit_block_diet: side and used sets must live on V(h)");
  if (vminus.and_count(vplus) != 0 || vminus.count() + vplus.count() != n)
    throw SizeMismatch("audit_block_diet: sides must partition V(h)");
  const std::vector<int> ml = vminus.to_list(), pl = vplus.to_list();
  const long long nm = static_cast<long long>(ml.size()), np = static_cast<long long>(pl.size());
  if (nm == 0 || np == 0) throw EmptySide("audit_block_diet: a side is empty");

  const Rat dmm = nm >= 2 ? Rat(h.edges_within(vminus)) / Rat(binom(nm, 2)) : Rat(0);
  const Rat dpp = np >= 2 ? Rat(h.edges_within(vplus)) / Rat(binom(np, 2)) : Rat(0);
  const Rat dmp = Rat(h.edges_between(vminus, vplus)) / (Rat(nm) * np);
  const long long freem = vminus.andnot_count(u), freep = vplus.andnot_count(u);

  AuditReport rep;
  rep.definition = "block-diet";
  rep.gamma = gamma;
  rep.L = L;

  // a zero density factor raised to a positive power makes the display hold
  // only as 0 = 0 with free vertices left over; the host is then not block
  // quasirandom in any multiplicative sense, so the tuple fails
  auto check = [&](long long actual, const Rat& expected, long long free_target, Json wit) {
    wit["actual"] = actual;
    wit["expected"] = rat_str(expected);
    if (expected == 0 && free_target > 0) {
      wit["zero_density"] = true;
      rep.absorb_infinite(wit);
      return;
    }
    Rat ratio;
    if (tuple_ratio(actual, expected, ratio))
      rep.absorb(ratio, wit);
    else
      rep.absorb_infinite(wit);
  };

  auto eval = [&](const std::vector<int>& sm, const std::vector<int>& sp) {
    Bits t1 = vplus, t2 = vminus;
    for (int w : sm) {
      t1 &= h.adj[static_cast<size_t>(w)];
      t2 &= h.adj[static_cast<size_t>(w)];
    }
    for (int w : sp) {
      t1 &= h.adj[static_cast<size_t>(w)];
      t2 &= h.adj[static_cast<size_t>(w)];
    }
    const unsigned a = static_cast<unsigned>(sm.size()), b = static_cast<unsigned>(sp.size());
    Json base;
    base["S_minus"] = vec_json(sm);
    base["S_plus"] = vec_json(sp);
    {
      Json wit = base;
      wit["display"] = 1;
      check(t1.andnot_count(u), Rat(freep) * rat_pow(dpp, b) * rat_pow(dmp, a), freep,
            std::move(wit));
    }
    {
      Json wit = base;
      wit["display"] = 2;
      check(t2.andnot_count(u), Rat(freem) * rat_pow(dmm, a) * rat_pow(dmp, b), freem,
            std::move(wit));
    }
  };

  Int total = 0;
  for (int a = 0; a <= L; ++a)
    for (int b = 0; a + b <= L; ++b) total += binom(nm, a) * binom(np, b);
  ModePlan mp = plan_mode(total, budget);
  rep.mode = mp.name;
  if (mp.exhaustive) {
    for (int a = 0; a <= std::min<long long>(L, nm); ++a) {
      for_each_combination(static_cast<int>(nm), a, [&](const std::vector<int>& mi) {
        std::vector<int> sm = map_through(ml, mi);
        for (int b = 0; a + b <= L && b <= np; ++b) {
          for_each_combination(static_cast<int>(np), b, [&](const std::vector<int>& pi) {
            eval(sm, map_through(pl, pi));
          });
        }
      });
    }
  } else {
    Rng rng(seed);
    std::vector<std::pair<std::pair<int, int>, Int>> cum;
    Int acc = 0;
    for (int a = 0; a <= L; ++a)
      for (int b = 0; a + b <= L; ++b) {
        Int w = binom(nm, a) * binom(np, b);
        if (w > 0) {
          acc += w;
          cum.push_back({{a, b}, acc});
        }
      }
    for (long long i = 0; i < mp.samples; ++i) {
      Int r = int_below(rng, acc);
      std::pair<int, int> sz = cum.back().first;
      for (auto& [ab, cw] : cum)
        if (r < cw) {
          sz = ab;
          break;
        }
      eval(map_through(ml, rng.sample_indices(static_cast<int>(nm), sz.first)),
           map_through(pl, rng.sample_indices(static_cast<int>(np), sz.second)));
    }
  }
  rep.finalize();
  return rep;
}

namespace detail {

AuditReport core_audit_index(const IndexCore& c, int L, const Rat& gamma, const Rat& d1,
                             const Rat& d2, long long budget, uint64_t seed) {
  AuditReport rep;
  rep.definition = "index-quasirandom";
  rep.gamma = gamma;
  rep.L = L;
  const int K = c.nused(), Kp = c.nanchors();
  const long long nv = static_cast<long long>(c.univ_list.size());

  // admissible tuples: S1, S2 free; T3 over anchored owners, then T1 and T2
  // over the remaining owners, the three pairwise disjoint
  Int t_part = 0;
  for (int t3 = 0; t3 <= std::min(L, Kp); ++t3) {
    Int inner1 = 0;
    for (int t1 = 0; t1 <= std::min<long long>(L, K - t3); ++t1) {
      Int inner2 = 0;
      for (int t2 = 0; t2 <= std::min<long long>(L, K - t3 - t1); ++t2)
        inner2 += binom(K - t3 - t1, t2);
      inner1 += binom(K - t3, t1) * inner2;
    }
    t_part += binom(Kp, t3) * inner1;
  }
  Int total = subsets_up_to(nv, L) * subsets_up_to(nv, L) * t_part;
  ModePlan mp = plan_mode(total, budget);
  rep.mode = mp.name;

  auto side_exponents = [&](const std::vector<int>& s, int& e_minus, int& e_plus) {
    for (int v : s) (c.side[static_cast<size_t>(v)] == 0 ? e_minus : e_plus)++;
  };

  auto eval = [&](const std::vector<int>& s1, const std::vector<int>& s2,
                  const std::vector<int>& t1, const std::vector<int>& t2,
                  const std::vector<int>& t3pos) {
    Bits b1 = c.idx_of_nbhd(c.h->common_neighbors(s1), true);
    Bits b2 = c.idx_of_nbhd(c.h->common_neighbors(s2), false);
    Rat prod(1);
    for (int l : t1) {
      b1.andnot(c.idx_um[static_cast<size_t>(l)]);
      prod *= Rat(c.n - c.used_count[static_cast<size_t>(l)], c.n);
    }
    for (int l : t2) {
      b2.andnot(c.idx_up[static_cast<size_t>(l)]);
      prod *= Rat(c.n - c.used_count[static_cast<size_t>(l)], c.n);
    }
    Bits sel = b1;
    sel &= b2;
    std::vector<int> t3owners;
    for (int pos : t3pos) {
      sel &= c.anchor_bits[static_cast<size_t>(pos)];
      prod *= Rat(c.anchor_count[static_cast<size_t>(pos)] * 2, c.n);
      t3owners.push_back(c.anchor_owner[static_cast<size_t>(pos)]);
    }
    int s1m = 0, s1p = 0, s2m = 0, s2p = 0;
    side_exponents(s1, s1m, s1p);
    side_exponents(s2, s2m, s2p);
    Rat expected = rat_pow(d1, static_cast<unsigned>(s1m + s2p)) *
                   rat_pow(d2, static_cast<unsigned>(s1p + s2m)) * Rat(c.n, 2) * prod;
    Json wit;
    wit["S1"] = vec_json(s1);
    wit["S2"] = vec_json(s2);
    wit["T1"] = vec_json(t1);
    wit["T2"] = vec_json(t2);
    wit["T3"] = vec_json(t3owners);
    absorb_tuple(rep, sel.count(), expected, std::move(wit));
  };

  if (mp.exhaustive) {
    for_each_subset(static_cast<int>(nv), L, [&](const std::vector<int>& i1) {
      std::vector<int> s1 = map_through(c.univ_list, i1);
      for_each_subset(static_cast<int>(nv), L, [&](const std::vector<int>& i2) {
        std::vector<int> s2 = map_through(c.univ_list, i2);
        for_each_subset(Kp, L, [&](const std::vector<int>& t3pos) {
          std::vector<char> blocked(static_cast<size_t>(K), 0);
          for (int pos : t3pos)
            blocked[static_cast<size_t>(c.anchor_owner[static_cast<size_t>(pos)])] = 1;
          std::vector<int> avail1;
          for (int l = 0; l < K; ++l)
            if (!blocked[static_cast<size_t>(l)]) avail1.push_back(l);
          for_each_subset(static_cast<int>(avail1.size()), L, [&](const std::vector<int>& j1) {
            std::vector<int> t1 = map_through(avail1, j1);
            std::vector<char> blocked2 = blocked;
            for (int l : t1) blocked2[static_cast<size_t>(l)] = 1;
            std::vector<int> avail2;
            for (int l = 0; l < K; ++l)
              if (!blocked2[static_cast<size_t>(l)]) avail2.push_back(l);
            for_each_subset(static_cast<int>(avail2.size()), L, [&](const std::vector<int>& j2) {
              eval(s1, s2, t1, map_through(avail2, j2), t3pos);
            });
          });
        });
      });
    });
  } else {
    Rng rng(seed);
    for (long long i = 0; i < mp.samples; ++i) {
      std::vector<int> s1 = map_through(c.univ_list, sample_subset(rng, nv, L));
      std::vector<int> s2 = map_through(c.univ_list, sample_subset(rng, nv, L));
      // rejection keeps the conditioned distribution uniform over valid tuples
      std::vector<int> t3pos, t1, t2;
      for (int attempt = 0;; ++attempt) {
        t3pos = sample_subset(rng, Kp, L);
        t1 = sample_subset(rng, K, L);
        t2 = sample_subset(rng, K, L);
        std::vector<char> hit(static_cast<size_t>(K), 0);
        bool ok = true;
        for (int pos : t3pos)
          hit[static_cast<size_t>(c.anchor_owner[static_cast<size_t>(pos)])] = 1;
        for (int l : t1) {
          if (hit[static_cast<size_t>(l)]) ok = false;
          hit[static_cast<size_t>(l)] = 1;
        }
        for (int l : t2)
          if (hit[static_cast<size_t>(l)]) ok = false;
        if (ok) break;
        if (attempt > 10000) {
          t3pos.clear();
          t1.clear();
          t2.clear();
          break;
        }
      }
      eval(s1, s2, t1, t2, t3pos);
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace detail

AuditReport audit_index(const Graph& h, const TerminalPairing& pairing,
                        const std::vector<Bits>& used,
                        const std::vector<std::pair<int, std::vector<int>>>& anchors, int L,
                        const Rat& gamma, const Rat& d1, const Rat& d2, long long budget,
                        uint64_t seed) {
  IndexCore core = build_index_core(h, pairing, used, anchors, true);
  return core_audit_index(core, L, gamma, d1, d2, budget, seed);
}

AuditReport check_anchor_distribution(const AnchoredPathForest& f, const Graph& h,
                                      const Rat& gamma) {
  AuditReport rep;
  rep.definition = "anchor-distribution";
  rep.gamma = gamma;
  rep.L = 0;
  const int n = h.n;
  const Bits &vm = f.sides.minus, &vp = f.sides.plus;
  const long long nm = vm.count(), np = vp.count();

  Rat dens[2][2];
  dens[0][0] = nm >= 2 ? Rat(h.edges_within(vm)) / Rat(binom(nm, 2)) : Rat(0);
  dens[1][1] = np >= 2 ? Rat(h.edges_within(vp)) / Rat(binom(np, 2)) : Rat(0);
  dens[0][1] = dens[1][0] =
      (nm > 0 && np > 0) ? Rat(h.edges_between(vm, vp)) / (Rat(nm) * np) : Rat(0);

  // anchor images bucketed by side pattern (anchor, its neighbour, the next)
  Bits triple[2][2][2] = {{{Bits(n), Bits(n)}, {Bits(n), Bits(n)}},
                          {{Bits(n), Bits(n)}, {Bits(n), Bits(n)}}};
  for (const PathSpec& ps : f.paths) {
    const int k = static_cast<int>(ps.xi.size());
    if (k < 3) continue;
    triple[ps.xi[0]][ps.xi[1]][ps.xi[2]].set(ps.head_host);
    triple[ps.xi[static_cast<size_t>(k - 1)]][ps.xi[static_cast<size_t>(k - 2)]]
          [ps.xi[static_cast<size_t>(k - 3)]]
              .set(ps.tail_host);
  }

  const Rat half_slack = Rat(ceil_pow_frac(n, 99, 100)) / 2;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Bits& side_b = b == 0 ? vm : vp;
      Bits pair_set = triple[a][b][0];
      pair_set |= triple[a][b][1];
      const long long pair_total = pair_set.count();
      for (int v : side_b.to_list()) {
        if (f.used.test(v)) continue;
        const Bits& nb = h.adj[static_cast<size_t>(v)];
        for (int cc = 0; cc < 2; ++cc) {
          Json wit;
          wit["pattern"] = Json::array({a, b, cc});
          wit["v"] = v;
          absorb_slack_tuple(rep, Rat(nb.and_count(triple[a][b][cc])),
                             dens[a][b] * triple[a][b][cc].count(), half_slack, std::move(wit));
        }
        Json wit;
        wit["pattern"] = Json::array({a, b});
        wit["v"] = v;
        absorb_slack_tuple(rep, Rat(nb.and_count(pair_set)), dens[a][b] * pair_total,
                           half_slack * 2, std::move(wit));
      }
    }
  rep.finalize();
  return rep;
}

AuditReport check_pair_distribution(const std::vector<AnchoredPathForest>& forests, const Graph& h,
                                    const Rat& gamma) {
  AuditReport rep;
  rep.definition = "pair-distribution";
  rep.gamma = gamma;
  rep.L = 0;
  const int n = h.n;
  if (forests.empty() || n == 0) {
    rep.finalize();
    return rep;
  }
  const SidePartition& sides = forests.front().sides;
  const long long nside[2] = {sides.minus.count(), sides.plus.count()};

  const size_t fcount = forests.size();
  std::vector<std::array<std::array<long long, 2>, 2>> cnt_interior(fcount), cnt_all(fcount);
  std::vector<std::array<long long, 2>> navail(fcount);
  // per forest: host vertex -> side of the forest neighbour of the anchor
  // embedded there, -1 when the vertex hosts no anchor
  std::vector<std::vector<signed char>> anchor_nbr(
      fcount, std::vector<signed char>(static_cast<size_t>(n), -1));
  for (size_t s = 0; s < fcount; ++s) {
    const AnchoredPathForest& f = forests[s];
    cnt_interior[s] = {{{{0, 0}}, {{0, 0}}}};
    cnt_all[s] = {{{{0, 0}}, {{0, 0}}}};
    navail[s] = {sides.minus.andnot_count(f.used), sides.plus.andnot_count(f.used)};
    for (const PathSpec& ps : f.paths) {
      const int k = static_cast<int>(ps.xi.size());
      for (int i = 0; i + 1 < k; ++i) {
        size_t xa = static_cast<size_t>(ps.xi[static_cast<size_t>(i)]);
        size_t xb = static_cast<size_t>(ps.xi[static_cast<size_t>(i + 1)]);
        // ordered convention: each edge contributes as (x,y) and as (y,x)
        cnt_all[s][xa][xb]++;
        cnt_all[s][xb][xa]++;
        if (i != 0 && i + 1 != k - 1) {
          cnt_interior[s][xa][xb]++;
          cnt_interior[s][xb][xa]++;
        }
      }
      if (k >= 2) {
        anchor_nbr[s][static_cast<size_t>(ps.head_host)] = static_cast<signed char>(ps.xi[1]);
        anchor_nbr[s][static_cast<size_t>(ps.tail_host)] =
            static_cast<signed char>(ps.xi[static_cast<size_t>(k - 2)]);
      }
    }
  }

  Rat rhs[2][2];
  for (size_t a = 0; a < 2; ++a)
    for (size_t b = 0; b < 2; ++b) {
      long long num = 0;
      for (size_t s = 0; s < fcount; ++s) num += cnt_all[s][a][b];
      rhs[a][b] = (nside[a] > 0 && nside[b] > 0) ? Rat(num) / (Rat(nside[a]) * nside[b]) : Rat(0);
    }
  const Rat slack = Rat(1) / Rat(ceil_pow_frac(n, 1, 100));

  for (auto [u, v] : h.edge_list()) {
    int a = sides.side_of(u), b = sides.side_of(v);
    if (a < 0 || b < 0) continue;
    if (a > b) {
      std::swap(u, v);
      std::swap(a, b);
    }
    Rat sum(0);
    for (size_t s = 0; s < fcount; ++s) {
      const bool uin = forests[s].used.test(u), vin = forests[s].used.test(v);
      if (!uin && !vin) {
        long long cw = cnt_interior[s][static_cast<size_t>(a)][static_cast<size_t>(b)];
        if (cw > 0)
          sum += Rat(cw) / (Rat(navail[s][static_cast<size_t>(a)]) *
                            navail[s][static_cast<size_t>(b)]);
      } else if (uin && !vin) {
        if (anchor_nbr[s][static_cast<size_t>(u)] == b)
          sum += Rat(1, navail[s][static_cast<size_t>(b)]);
      } else if (!uin && vin) {
        if (anchor_nbr[s][static_cast<size_t>(v)] == a)
          sum += Rat(1, navail[s][static_cast<size_t>(a)]);
      }
    }
    Json wit;
    wit["u"] = u;
    wit["v"] = v;
    absorb_slack_tuple(rep, sum, rhs[static_cast<size_t>(a)][static_cast<size_t>(b)], slack,
                       std::move(wit));
  }
  rep.finalize();
  return rep;
}

AuditReport audit_chest(const Chest& m, const Rat& gamma, int L, long long budget, uint64_t seed) {
  ChestView cv(m);
  const long long nv = cv.nv, nu = cv.nu;
  AuditReport rep;
  rep.definition = "chest-quasirandom";
  rep.gamma = gamma;
  rep.L = L;

  auto dens = [&](size_t cnt, const Int& denom) {
    return denom > 0 ? Rat(Int(static_cast<long long>(cnt)), denom) : Rat(0);
  };
  const Rat d1 = dens(m.e1.size(), Int(nv) * nv);
  const Rat d2 = dens(m.e2.size(), binom(nv, 2));
  const Rat d3 = dens(m.e3.size(), binom(nv, 2));
  const Rat d4 = dens(m.e4.size(), Int(nv) * nu);
  const Rat d5 = dens(m.e5.size(), Int(nv) * nu);
  const Rat d6 = dens(m.e6.size(), Int(nv) * nu);

  struct SlotDef {
    bool in_v;
    const std::vector<Bits>* nbhd;
    Rat density;
    const char* name;
  };
  // display 1 targets V: out/in layer-1 sets, then layer-2/3 sets in V and
  // layer-4/5/6 sets in U; display 2 targets U from V-side layer-4/5/6 sets
  const std::vector<SlotDef> slots1 = {{true, &cv.out1, d1, "S1"}, {true, &cv.in1, d1, "S1'"},
                                       {true, &cv.adj2, d2, "S2"}, {true, &cv.adj3, d3, "S3"},
                                       {false, &cv.u4, d4, "S4"},  {false, &cv.u5, d5, "S5"},
                                       {false, &cv.u6, d6, "S6"}};
  const std::vector<SlotDef> slots2 = {
      {true, &cv.v4, d4, "S4'"}, {true, &cv.v5, d5, "S5'"}, {true, &cv.v6, d6, "S6'"}};

  auto size_vectors = [&](const std::vector<SlotDef>& slots) {
    // all size vectors with total <= L, each with its exact tuple count
    std::vector<std::pair<std::vector<int>, Int>> out;
    std::vector<int> sz(slots.size(), 0);
    auto rec = [&](auto&& self, size_t i, int rem, Int ways, long long vleft,
                   long long uleft) -> void {
      if (i == slots.size()) {
        out.push_back({sz, ways});
        return;
      }
      for (int k = 0; k <= rem; ++k) {
        long long pool = slots[i].in_v ? vleft : uleft;
        Int c = binom(pool, k);
        if (c == 0 && k > 0) break;
        sz[i] = k;
        self(self, i + 1, rem - k, ways * c, slots[i].in_v ? vleft - k : vleft,
             slots[i].in_v ? uleft : uleft - k);
        sz[i] = 0;
      }
    };
    rec(rec, 0, L, Int(1), nv, nu);
    return out;
  };

  auto eval = [&](const std::vector<SlotDef>& slots, const std::vector<std::vector<int>>& picks,
                  int display) {
    const bool to_v = display == 1;
    Bits res(static_cast<int>(to_v ? nv : nu));
    res.set_all();
    Rat expected(to_v ? nv : nu);
    Json wit;
    wit["display"] = display;
    for (size_t i = 0; i < slots.size(); ++i) {
      for (int x : picks[i]) res &= (*slots[i].nbhd)[static_cast<size_t>(x)];
      expected *= rat_pow(slots[i].density, static_cast<unsigned>(picks[i].size()));
      wit[slots[i].name] = vec_json(picks[i]);
    }
    absorb_tuple(rep, res.count(), expected, std::move(wit));
  };

  auto family_total = [&](const std::vector<SlotDef>& slots) {
    Int t = 0;
    for (auto& [sz, w] : size_vectors(slots)) t += w;
    return t;
  };
  const Int c1 = family_total(slots1), c2 = family_total(slots2);
  ModePlan mp = plan_mode(c1 + c2, budget);
  rep.mode = mp.name;

  if (mp.exhaustive) {
    auto enumerate = [&](const std::vector<SlotDef>& slots, int display) {
      std::vector<std::vector<int>> picks(slots.size());
      Bits vused(static_cast<int>(nv)), uused(static_cast<int>(nu));
      auto rec = [&](auto&& self, size_t i, int rem) -> void {
        if (i == slots.size()) {
          eval(slots, picks, display);
          return;
        }
        const long long pool = slots[i].in_v ? nv : nu;
        Bits& mask = slots[i].in_v ? vused : uused;
        for (int k = 0; k <= rem && k <= pool; ++k) {
          for_each_combination(static_cast<int>(pool), k, [&](const std::vector<int>& comb) {
            for (int x : comb)
              if (mask.test(x)) return;
            for (int x : comb) mask.set(x);
            picks[i] = comb;
            self(self, i + 1, rem - k);
            for (int x : comb) mask.reset(x);
          });
        }
        picks[i].clear();
      };
      rec(rec, 0, L);
    };
    enumerate(slots1, 1);
    enumerate(slots2, 2);
  } else {
    Rng rng(seed);
    auto sample_one = [&](const std::vector<SlotDef>& slots, int display) {
      // size vector weighted by exact tuple count, then one pooled draw per
      // ground set split uniformly across that set's slots
      auto vecs = size_vectors(slots);
      Int acc = 0;
      for (auto& [sz, w] : vecs) acc += w;
      if (acc == 0) return;
      Int r = int_below(rng, acc);
      size_t pick = 0;
      for (; pick < vecs.size(); ++pick) {
        if (r < vecs[pick].second) break;
        r -= vecs[pick].second;
      }
      const std::vector<int>& sizes = vecs[pick].first;
      int vtot = 0, utot = 0;
      for (size_t i = 0; i < slots.size(); ++i) (slots[i].in_v ? vtot : utot) += sizes[i];
      std::vector<int> vpool = rng.sample_indices(static_cast<int>(nv), vtot);
      std::vector<int> upool = rng.sample_indices(static_cast<int>(nu), utot);
      rng.shuffle(vpool);
      rng.shuffle(upool);
      std::vector<std::vector<int>> picks(slots.size());
      size_t vi = 0, ui = 0;
      for (size_t i = 0; i < slots.size(); ++i) {
        for (int k = 0; k < sizes[i]; ++k)
          picks[i].push_back(slots[i].in_v ? vpool[vi++] : upool[ui++]);
        std::sort(picks[i].begin(), picks[i].end());
      }
      eval(slots, picks, display);
    };
    for (long long i = 0; i < mp.samples; ++i) {
      if (int_below(rng, c1 + c2) < c1)
        sample_one(slots1, 1);
      else
        sample_one(slots2, 2);
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace gp
