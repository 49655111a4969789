#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/rng.hpp"
#include "quasirandom/audit_internal.hpp"
#include "quasirandom/audits.hpp"

namespace gp {

using namespace detail;

namespace {

AuditReport blank_item(const char* name, const Rat& gamma, int L) {
  AuditReport item;
  item.definition = name;
  item.gamma = gamma;
  item.L = L;
  return item;
}

}  // namespace

// The eight setup conditions.  The host may carry one spare unpaired vertex;
// every check runs on the paired universe and the formula vertex count is
// twice the pair count, so the spare vertex and its edges never enter.
AuditReport audit_setup(const SetupBundle& b, const Rat& gamma, int L, const Rat& d1,
                        const Rat& d2, long long budget, uint64_t seed) {
  if (b.host == nullptr) throw MalformedBundle("audit_setup: bundle has no host");
  const Graph& h = *b.host;
  const TerminalPairing& pr = b.pairing;
  const int npairs = pr.npairs();
  if (npairs == 0) throw MalformedBundle("audit_setup: empty terminal pairing");
  if (2 * npairs > h.n) throw MalformedBundle("audit_setup: pairing larger than the host");
  const long long n = 2LL * npairs;

  std::vector<int> side(static_cast<size_t>(h.n), -1), pidx(static_cast<size_t>(h.n), -1);
  Bits vminus(h.n), vplus(h.n);
  for (int i = 0; i < npairs; ++i) {
    auto [mv, pv] = pr.pairs[static_cast<size_t>(i)];
    if (mv < 0 || mv >= h.n || pv < 0 || pv >= h.n)
      throw MalformedBundle("audit_setup: pairing vertex out of range");
    if (mv == pv || side[static_cast<size_t>(mv)] != -1 || side[static_cast<size_t>(pv)] != -1)
      throw MalformedBundle("audit_setup: pairing reuses a vertex");
    side[static_cast<size_t>(mv)] = 0;
    side[static_cast<size_t>(pv)] = 1;
    pidx[static_cast<size_t>(mv)] = i;
    pidx[static_cast<size_t>(pv)] = i;
    vminus.set(mv);
    vplus.set(pv);
  }
  if (pr.box_dot != -1 &&
      (pr.box_dot < 0 || pr.box_dot >= h.n || side[static_cast<size_t>(pr.box_dot)] != -1))
    throw MalformedBundle("audit_setup: spare vertex collides with the pairing");
  Bits universe = vminus;
  universe |= vplus;
  const std::vector<int> ul = universe.to_list();
  const int n_ul = static_cast<int>(ul.size());

  const size_t ng = b.guests.size();
  std::vector<int> cls(ng, -1);
  auto mark = [&](const std::vector<int>& js, int c) {
    for (int s : js) {
      if (s < 0 || static_cast<size_t>(s) >= ng || cls[static_cast<size_t>(s)] != -1)
        throw MalformedBundle("audit_setup: class lists must partition the guests");
      cls[static_cast<size_t>(s)] = c;
    }
  };
  mark(b.j0, 0);
  mark(b.j1, 1);
  mark(b.j2, 2);
  for (size_t s = 0; s < ng; ++s)
    if (cls[s] == -1) throw MalformedBundle("audit_setup: guest missing from the class lists");

  std::vector<Bits> umask(ng, Bits(h.n));
  std::vector<long long> usize(ng, 0), isize(ng, 0), asz(ng, 0);
  std::vector<Bits> ibits(ng, Bits(npairs));
  for (size_t s = 0; s < ng; ++s) {
    const SetupGuest& g = b.guests[s];
    if (g.used.n != h.n) throw MalformedBundle("audit_setup: used-set size mismatch");
    std::vector<char> seen(static_cast<size_t>(h.n), 0);
    for (auto [x, y] : g.anchor_pairs) {
      for (int v : {x, y}) {
        if (v < 0 || v >= h.n || side[static_cast<size_t>(v)] == -1)
          throw MalformedBundle("audit_setup: anchor outside the paired vertices");
        if (!g.used.test(v)) throw MalformedBundle("audit_setup: anchor not in its used set");
        if (seen[static_cast<size_t>(v)]++)
          throw MalformedBundle("audit_setup: anchor repeated within a guest");
      }
    }
    if (!g.index_set.empty() && cls[s] != 0)
      throw MalformedBundle("audit_setup: index set on a guest outside the first class");
    std::vector<char> iseen(static_cast<size_t>(npairs), 0);
    for (int i : g.index_set) {
      if (i < 0 || i >= npairs) throw MalformedBundle("audit_setup: index entry out of range");
      if (iseen[static_cast<size_t>(i)]++)
        throw MalformedBundle("audit_setup: index entry repeated");
      ibits[s].set(i);
    }
    isize[s] = static_cast<long long>(g.index_set.size());
    umask[s] = g.used;
    umask[s] &= universe;
    usize[s] = umask[s].count();
    asz[s] = 2LL * static_cast<long long>(g.anchor_pairs.size());
  }

  // anchor buckets: per guest, anchors split by (partner side a, own side o);
  // global per-class tallies for the counting conditions
  std::vector<Bits> ab_bits(ng * 4, Bits(h.n));
  auto abb = [&](size_t s, int a, int o) -> Bits& { return ab_bits[s * 4 + 2 * a + o]; };
  std::vector<std::array<std::array<long long, 2>, 2>> ab_cnt(
      ng, {{{{0, 0}}, {{0, 0}}}});  // [partner side][own side]
  std::array<std::array<std::vector<long long>, 2>, 2> cnt3;  // [class-1][partner side][v]
  for (auto& byside : cnt3)
    for (auto& vv : byside) vv.assign(static_cast<size_t>(h.n), 0);
  std::array<std::vector<long long>, 3> cnt7;
  for (auto& vv : cnt7) vv.assign(static_cast<size_t>(h.n), 0);
  std::vector<std::vector<int>> anchored_at(static_cast<size_t>(h.n));
  std::array<long long, 3> sumA{0, 0, 0};
  for (size_t s = 0; s < ng; ++s) {
    const int c = cls[s];
    for (auto [x, y] : b.guests[s].anchor_pairs) {
      const int sx = side[static_cast<size_t>(x)], sy = side[static_cast<size_t>(y)];
      abb(s, sy, sx).set(x);
      ab_cnt[s][static_cast<size_t>(sy)][static_cast<size_t>(sx)]++;
      abb(s, sx, sy).set(y);
      ab_cnt[s][static_cast<size_t>(sx)][static_cast<size_t>(sy)]++;
      if (c == 1 || c == 2) {
        cnt3[static_cast<size_t>(c - 1)][static_cast<size_t>(sy)][static_cast<size_t>(x)]++;
        cnt3[static_cast<size_t>(c - 1)][static_cast<size_t>(sx)][static_cast<size_t>(y)]++;
      }
      cnt7[static_cast<size_t>(c)][static_cast<size_t>(x)]++;
      cnt7[static_cast<size_t>(c)][static_cast<size_t>(y)]++;
      anchored_at[static_cast<size_t>(x)].push_back(static_cast<int>(s));
      anchored_at[static_cast<size_t>(y)].push_back(static_cast<int>(s));
    }
    sumA[static_cast<size_t>(c)] += asz[s];
  }

  AuditReport rep;
  rep.definition = "quasirandom-setup";
  rep.gamma = gamma;
  rep.L = L;
  Rng root(seed);

  bool all_exhaustive = true;
  long long sampled_checked = 0;
  auto fold = [&](const char* key, const AuditReport& item) {
    Json j;
    j["pass"] = item.pass;
    j["worst_ratio"] = item.ratio_infinite ? Json("inf") : Json(rat_str(item.worst_ratio));
    j["witness"] = item.witness;
    j["checked"] = item.checked;
    j["mode"] = item.mode;
    rep.items[key] = j;
    rep.checked += item.checked;
    if (item.mode != "exhaustive") {
      all_exhaustive = false;
      sampled_checked += item.checked;
    }
    const bool worse = item.ratio_infinite
                           ? !rep.ratio_infinite
                           : (!rep.ratio_infinite && item.worst_ratio > rep.worst_ratio);
    if (worse) {
      rep.ratio_infinite = item.ratio_infinite;
      if (!item.ratio_infinite) rep.worst_ratio = item.worst_ratio;
      Json w = item.witness;
      w["item"] = key;
      rep.witness = w;
    }
  };

  // Quasi1: indexed-pair quasirandomness over all used sets and the
  // first-class index sets
  {
    std::vector<Bits> used_raw;
    used_raw.reserve(ng);
    for (const SetupGuest& g : b.guests) used_raw.push_back(g.used);
    std::vector<std::pair<int, std::vector<int>>> anchors;
    anchors.reserve(b.j0.size());
    for (int s : b.j0) anchors.push_back({s, b.guests[static_cast<size_t>(s)].index_set});
    IndexCore core = build_index_core(h, pr, used_raw, anchors, false);
    fold("Quasi1", core_audit_index(core, L, gamma, d1, d2, budget, root.split(1).key));
  }

  // Quasi2: anchors balanced over side patterns, quarters for the path
  // classes and halves for the first class
  {
    AuditReport item = blank_item("Quasi2", gamma, L);
    std::vector<int> j12 = b.j1;
    j12.insert(j12.end(), b.j2.begin(), b.j2.end());
    const long long t12 = 4LL * static_cast<long long>(j12.size());
    const long long t0 = 2LL * static_cast<long long>(b.j0.size());
    ModePlan mp = plan_mode(Int(t12 + t0), budget);
    item.mode = mp.name;
    auto eval12 = [&](int s, int a, int bb) {
      Json wit;
      wit["s"] = s;
      wit["a"] = a;
      wit["b"] = bb;
      absorb_tuple(item,
                   ab_cnt[static_cast<size_t>(s)][static_cast<size_t>(bb)][static_cast<size_t>(a)],
                   Rat(asz[static_cast<size_t>(s)], 4), std::move(wit));
    };
    auto eval0 = [&](int s, int a) {
      Json wit;
      wit["s"] = s;
      wit["a"] = a;
      const auto& m = ab_cnt[static_cast<size_t>(s)];
      absorb_tuple(item, m[0][static_cast<size_t>(a)] + m[1][static_cast<size_t>(a)],
                   Rat(asz[static_cast<size_t>(s)], 2), std::move(wit));
    };
    if (mp.exhaustive) {
      for (int s : j12)
        for (int a = 0; a < 2; ++a)
          for (int bb = 0; bb < 2; ++bb) eval12(s, a, bb);
      for (int s : b.j0)
        for (int a = 0; a < 2; ++a) eval0(s, a);
    } else {
      Rng rng = root.split(2);
      for (long long it = 0; it < mp.samples; ++it) {
        long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(t12 + t0)));
        if (r < t12)
          eval12(j12[static_cast<size_t>(r / 4)], static_cast<int>((r % 4) >> 1),
                 static_cast<int>(r & 1));
        else {
          r -= t12;
          eval0(b.j0[static_cast<size_t>(r / 2)], static_cast<int>(r & 1));
        }
      }
    }
    item.finalize();
    fold("Quasi2", item);
  }

  // Quasi3: each host vertex anchors its fair share of the path classes,
  // split by the partner's side
  {
    AuditReport item = blank_item("Quasi3", gamma, L);
    ModePlan mp = plan_mode(Int(4LL * n_ul), budget);
    item.mode = mp.name;
    const Rat exp3[2] = {Rat(sumA[1], 2 * n), Rat(sumA[2], 2 * n)};
    auto eval = [&](int v, int a, int c) {
      Json wit;
      wit["v"] = v;
      wit["a"] = a;
      wit["class"] = c;
      absorb_tuple(item,
                   cnt3[static_cast<size_t>(c - 1)][static_cast<size_t>(a)][static_cast<size_t>(v)],
                   exp3[c - 1], std::move(wit));
    };
    if (mp.exhaustive) {
      for (int v : ul)
        for (int a = 0; a < 2; ++a)
          for (int c = 1; c <= 2; ++c) eval(v, a, c);
    } else {
      Rng rng = root.split(3);
      for (long long it = 0; it < mp.samples; ++it) {
        long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(4LL * n_ul)));
        eval(ul[static_cast<size_t>(r / 4)], static_cast<int>((r % 4) >> 1),
             static_cast<int>(r & 1) + 1);
      }
    }
    item.finalize();
    fold("Quasi3", item);
  }

  // per-first-class-guest host bitmaps of the index-set terminals
  std::vector<Bits> ibh(b.j0.size(), Bits(h.n)), iph(b.j0.size(), Bits(h.n));
  for (size_t p = 0; p < b.j0.size(); ++p) {
    const int s = b.j0[p];
    for (int i : b.guests[static_cast<size_t>(s)].index_set) {
      ibh[p].set(pr.pairs[static_cast<size_t>(i)].first);
      iph[p].set(pr.pairs[static_cast<size_t>(i)].second);
    }
  }
  auto free_list = [&](int s) {
    std::vector<int> out;
    for (int v : ul)
      if (!umask[static_cast<size_t>(s)].test(v)) out.push_back(v);
    return out;
  };

  // Quasi4: unused vertices see the index-set terminals at the right density
  {
    AuditReport item = blank_item("Quasi4", gamma, L);
    std::vector<long long> cum;  // per first-class position: checks so far
    long long total4 = 0;
    for (int s : b.j0) {
      total4 += 2 * (n - usize[static_cast<size_t>(s)]);
      cum.push_back(total4);
    }
    ModePlan mp = plan_mode(Int(total4), budget);
    item.mode = mp.name;
    auto eval_one = [&](size_t p, int w, bool same_side) {
      const int s = b.j0[p];
      const bool wminus = side[static_cast<size_t>(w)] == 0;
      const Bits& tgt = same_side == wminus ? ibh[p] : iph[p];
      Json wit;
      wit["s"] = s;
      wit["v"] = w;
      wit["density"] = same_side ? "d1" : "d2";
      absorb_tuple(item, h.adj[static_cast<size_t>(w)].and_count(tgt),
                   (same_side ? d1 : d2) * Rat(isize[static_cast<size_t>(s)]), std::move(wit));
    };
    if (mp.exhaustive) {
      for (size_t p = 0; p < b.j0.size(); ++p)
        for (int w : free_list(b.j0[p])) {
          eval_one(p, w, true);
          eval_one(p, w, false);
        }
    } else {
      Rng rng = root.split(4);
      for (long long it = 0; it < mp.samples; ++it) {
        long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(total4)));
        size_t p = static_cast<size_t>(
            std::lower_bound(cum.begin(), cum.end(), r + 1) - cum.begin());
        long long base = p == 0 ? 0 : cum[p - 1];
        long long rr = r - base;
        std::vector<int> fl = free_list(b.j0[p]);
        eval_one(p, fl[static_cast<size_t>(rr >> 1)], (rr & 1) == 0);
      }
    }
    item.finalize();
    fold("Quasi4", item);
  }

  // Quasi5: unused vertices see each guest's anchor buckets at the right
  // density, bucket split by the partner's side and the anchor's own side
  {
    AuditReport item = blank_item("Quasi5", gamma, L);
    std::vector<long long> cum;
    long long total5 = 0;
    for (size_t s = 0; s < ng; ++s) {
      total5 += 4 * (n - usize[s]);
      cum.push_back(total5);
    }
    ModePlan mp = plan_mode(Int(total5), budget);
    item.mode = mp.name;
    auto eval_one = [&](size_t s, int w, int a, int o) {
      const bool wside = side[static_cast<size_t>(w)];
      const Rat& dd = (static_cast<int>(wside) == o) ? d1 : d2;
      Json wit;
      wit["s"] = static_cast<int>(s);
      wit["v"] = w;
      wit["a"] = a;
      wit["target"] = o;
      absorb_tuple(item, h.adj[static_cast<size_t>(w)].and_count(abb(s, a, o)),
                   dd * Rat(ab_cnt[s][static_cast<size_t>(a)][static_cast<size_t>(o)]),
                   std::move(wit));
    };
    if (mp.exhaustive) {
      for (size_t s = 0; s < ng; ++s)
        for (int w : free_list(static_cast<int>(s)))
          for (int a = 0; a < 2; ++a) {
            eval_one(s, w, a, 0);
            eval_one(s, w, a, 1);
          }
    } else {
      Rng rng = root.split(5);
      for (long long it = 0; it < mp.samples; ++it) {
        long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(total5)));
        size_t s = static_cast<size_t>(
            std::lower_bound(cum.begin(), cum.end(), r + 1) - cum.begin());
        long long base = s == 0 ? 0 : cum[s - 1];
        long long rr = r - base;
        std::vector<int> fl = free_list(static_cast<int>(s));
        eval_one(s, fl[static_cast<size_t>(rr >> 2)], static_cast<int>((rr >> 1) & 1),
                 static_cast<int>(rr & 1));
      }
    }
    item.finalize();
    fold("Quasi5", item);
  }

  // Quasi6: used sets hit and miss small vertex sets like independent random
  // sets of their sizes; first-class index sets join in when no terminal
  // pair is split across the chosen sets
  {
    AuditReport item = blank_item("Quasi6", gamma, L);
    std::array<std::map<long long, long long>, 3> uhist;
    std::map<std::pair<long long, long long>, long long> j0hist;
    for (size_t s = 0; s < ng; ++s) {
      uhist[static_cast<size_t>(cls[s])][usize[s]]++;
      if (cls[s] == 0) j0hist[{usize[s], isize[s]}]++;
    }
    Int w_ab = 0;
    std::vector<std::pair<std::pair<int, int>, Int>> size_cum;
    for (int a = 0; a <= std::min(L, n_ul); ++a)
      for (int bb = 0; bb <= std::min(L, n_ul - a); ++bb) {
        Int w = binom(n_ul, a) * binom(n_ul - a, bb);
        if (w > 0) {
          w_ab += w;
          size_cum.push_back({{a, bb}, w_ab});
        }
      }
    const Int b_upper = w_ab * subsets_up_to(npairs, L);
    ModePlan mp = plan_mode(2 * w_ab + b_upper, budget);
    item.mode = mp.name;

    auto hits = [&](int s, const std::vector<int>& s1, const std::vector<int>& s2) {
      for (int v : s1)
        if (umask[static_cast<size_t>(s)].test(v)) return false;
      for (int v : s2)
        if (!umask[static_cast<size_t>(s)].test(v)) return false;
      return true;
    };
    auto eval_a = [&](const std::vector<int>& s1, const std::vector<int>& s2, int c) {
      long long actual = 0;
      for (int s : (c == 1 ? b.j1 : b.j2))
        if (hits(s, s1, s2)) ++actual;
      Rat expected(0);
      for (auto& [u, cnt] : uhist[static_cast<size_t>(c)])
        expected += Rat(cnt) * rat_pow(Rat(n - u, n), static_cast<unsigned>(s1.size())) *
                    rat_pow(Rat(u, n), static_cast<unsigned>(s2.size()));
      Json wit;
      wit["S1"] = vec_json(s1);
      wit["S2"] = vec_json(s2);
      wit["class"] = c;
      absorb_tuple(item, actual, expected, std::move(wit));
    };
    auto eval_b = [&](const std::vector<int>& s1, const std::vector<int>& s2,
                      const std::vector<int>& t) {
      long long actual = 0;
      for (int s : b.j0) {
        if (!hits(s, s1, s2)) continue;
        bool ok = true;
        for (int i : t)
          if (!ibits[static_cast<size_t>(s)].test(i)) {
            ok = false;
            break;
          }
        if (ok) ++actual;
      }
      Rat expected(0);
      for (auto& [key, cnt] : j0hist)
        expected += Rat(cnt) * rat_pow(Rat(n - key.first, n), static_cast<unsigned>(s1.size())) *
                    rat_pow(Rat(key.first, n), static_cast<unsigned>(s2.size())) *
                    rat_pow(Rat(2 * key.second, n), static_cast<unsigned>(t.size()));
      Json wit;
      wit["S1"] = vec_json(s1);
      wit["S2"] = vec_json(s2);
      wit["T"] = vec_json(t);
      wit["class"] = 0;
      absorb_tuple(item, actual, expected, std::move(wit));
    };
    // pair indices with a vertex inside the sets; false when a whole pair is
    auto touched = [&](const std::vector<int>& s1, const std::vector<int>& s2,
                       std::vector<char>& hit) {
      hit.assign(static_cast<size_t>(npairs), 0);
      for (const std::vector<int>* sv : {&s1, &s2})
        for (int v : *sv) {
          const int j = pidx[static_cast<size_t>(v)];
          if (hit[static_cast<size_t>(j)]++) return false;
        }
      return true;
    };

    if (mp.exhaustive) {
      for_each_subset(n_ul, L, [&](const std::vector<int>& i1) {
        const std::vector<int> s1 = map_through(ul, i1);
        std::vector<int> rem;
        rem.reserve(ul.size());
        {
          size_t k = 0;
          for (int idx = 0; idx < n_ul; ++idx) {
            if (k < i1.size() && i1[k] == idx) {
              ++k;
              continue;
            }
            rem.push_back(ul[static_cast<size_t>(idx)]);
          }
        }
        for_each_subset(static_cast<int>(rem.size()), L, [&](const std::vector<int>& i2) {
          const std::vector<int> s2 = map_through(rem, i2);
          eval_a(s1, s2, 1);
          eval_a(s1, s2, 2);
          std::vector<char> hit;
          if (!touched(s1, s2, hit)) return;
          std::vector<int> avail;
          for (int j = 0; j < npairs; ++j)
            if (!hit[static_cast<size_t>(j)]) avail.push_back(j);
          for_each_subset(static_cast<int>(avail.size()), L, [&](const std::vector<int>& i3) {
            eval_b(s1, s2, map_through(avail, i3));
          });
        });
      });
    } else {
      Rng rng = root.split(6);
      auto sample_pair = [&](std::vector<int>& s1, std::vector<int>& s2) {
        Int r = int_below(rng, w_ab);
        std::pair<int, int> sz = size_cum.back().first;
        for (auto& [ab, cw] : size_cum)
          if (r < cw) {
            sz = ab;
            break;
          }
        std::vector<int> i1 = rng.sample_indices(n_ul, sz.first);
        s1 = map_through(ul, i1);
        std::vector<int> rem;
        rem.reserve(ul.size());
        size_t k = 0;
        for (int idx = 0; idx < n_ul; ++idx) {
          if (k < i1.size() && i1[k] == idx) {
            ++k;
            continue;
          }
          rem.push_back(ul[static_cast<size_t>(idx)]);
        }
        s2 = map_through(rem, rng.sample_indices(static_cast<int>(rem.size()), sz.second));
      };
      for (long long it = 0; it < mp.samples; ++it) {
        Int r = int_below(rng, 2 * w_ab + b_upper);
        std::vector<int> s1, s2;
        if (r < 2 * w_ab) {
          sample_pair(s1, s2);
          eval_a(s1, s2, r < w_ab ? 1 : 2);
        } else {
          for (int attempt = 0; attempt <= 10000; ++attempt) {
            sample_pair(s1, s2);
            std::vector<int> t = sample_subset(rng, npairs, L);
            std::vector<char> hit;
            if (!touched(s1, s2, hit)) continue;
            bool tok = true;
            for (int j : t)
              if (hit[static_cast<size_t>(j)]) {
                tok = false;
                break;
              }
            if (!tok) continue;
            eval_b(s1, s2, t);
            break;
          }
        }
      }
    }
    item.finalize();
    fold("Quasi6", item);
  }

  // Quasi7: every host vertex is an anchor for its fair share of each class
  {
    AuditReport item = blank_item("Quasi7", gamma, L);
    ModePlan mp = plan_mode(Int(3LL * n_ul), budget);
    item.mode = mp.name;
    const Rat exp7[3] = {Rat(sumA[0], n), Rat(sumA[1], n), Rat(sumA[2], n)};
    auto eval = [&](int v, int c) {
      Json wit;
      wit["v"] = v;
      wit["class"] = c;
      absorb_tuple(item, cnt7[static_cast<size_t>(c)][static_cast<size_t>(v)], exp7[c],
                   std::move(wit));
    };
    if (mp.exhaustive) {
      for (int v : ul)
        for (int c = 0; c < 3; ++c) eval(v, c);
    } else {
      Rng rng = root.split(7);
      for (long long it = 0; it < mp.samples; ++it) {
        long long r = static_cast<long long>(rng.below(static_cast<uint64_t>(3LL * n_ul)));
        eval(ul[static_cast<size_t>(r / 3)], static_cast<int>(r % 3));
      }
    }
    item.finalize();
    fold("Quasi7", item);
  }

  // Quasi8: anchored-here-and-free-there pair counts; for the first class
  // only when the two vertices are not a terminal pair
  {
    AuditReport item = blank_item("Quasi8", gamma, L);
    const long long pairs_ord = static_cast<long long>(n_ul) * (n_ul - 1);
    const long long total8 = 3 * pairs_ord - n_ul;
    ModePlan mp = plan_mode(Int(total8), budget);
    item.mode = mp.name;
    Rat e8[3] = {Rat(0), Rat(0), Rat(0)};
    for (size_t s = 0; s < ng; ++s)
      e8[static_cast<size_t>(cls[s])] += Rat(Int(asz[s]) * (n - usize[s]), Int(n) * n);
    auto eval = [&](int u, int v, int c) {
      long long actual = 0;
      for (int s : anchored_at[static_cast<size_t>(u)])
        if (cls[static_cast<size_t>(s)] == c && !umask[static_cast<size_t>(s)].test(v)) ++actual;
      Json wit;
      wit["u"] = u;
      wit["v"] = v;
      wit["class"] = c;
      absorb_tuple(item, actual, e8[static_cast<size_t>(c)], std::move(wit));
    };
    if (mp.exhaustive) {
      for (int u : ul)
        for (int v : ul) {
          if (u == v) continue;
          eval(u, v, 1);
          eval(u, v, 2);
          if (pidx[static_cast<size_t>(u)] != pidx[static_cast<size_t>(v)]) eval(u, v, 0);
        }
    } else {
      Rng rng = root.split(8);
      for (long long it = 0; it < mp.samples; ++it) {
        for (int attempt = 0; attempt <= 10000; ++attempt) {
          const int u = ul[static_cast<size_t>(rng.below(static_cast<uint64_t>(n_ul)))];
          const int v = ul[static_cast<size_t>(rng.below(static_cast<uint64_t>(n_ul)))];
          const int c = rng.below_int(3);
          if (u == v) continue;
          if (c == 0 && pidx[static_cast<size_t>(u)] == pidx[static_cast<size_t>(v)]) continue;
          eval(u, v, c);
          break;
        }
      }
    }
    item.finalize();
    fold("Quasi8", item);
  }

  rep.mode = all_exhaustive ? "exhaustive" : "sampled(" + std::to_string(sampled_checked) + ")";
  rep.finalize();
  return rep;
}

}  // namespace gp
