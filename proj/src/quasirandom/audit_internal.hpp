#pragma once
#include <algorithm>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/packing.hpp"
#include "core/rng.hpp"
#include "quasirandom/audit_report.hpp"

// shared plumbing for the audit family: tuple-space sizing, exact uniform
// sampling, and the indexed-pair evaluation core
namespace gp::detail {

inline Json vec_json(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

inline Int subsets_up_to(long long n, int L) {
  Int t = 0;
  for (int k = 0; k <= L; ++k) t += binom(n, k);
  return t;
}

struct ModePlan {
  bool exhaustive = true;
  long long samples = 0;
  std::string name = "exhaustive";
};

inline ModePlan plan_mode(const Int& total, long long budget) {
  if (total <= budget) return {};
  return {false, budget, "sampled(" + std::to_string(budget) + ")"};
}

// uniform Int in [0, m), m >= 1
inline Int int_below(Rng& rng, const Int& m) {
  if (m <= 1) return 0;
  size_t bits = boost::multiprecision::msb(m) + 1;
  while (true) {
    Int r = 0;
    size_t filled = 0;
    while (filled < bits) {
      r <<= 64;
      r += rng.next();
      filled += 64;
    }
    r >>= (filled - bits);
    if (r < m) return r;
  }
}

// size k with probability C(n,k) / sum_{j<=L} C(n,j)
inline int sample_size(Rng& rng, long long n, int L) {
  Int r = int_below(rng, subsets_up_to(n, L));
  for (int k = 0; k <= L; ++k) {
    Int c = binom(n, k);
    if (r < c) return k;
    r -= c;
  }
  return 0;
}

// uniform subset of [0, n) with |S| <= L, sorted
inline std::vector<int> sample_subset(Rng& rng, long long n, int L) {
  return rng.sample_indices(static_cast<int>(n), sample_size(rng, n, L));
}

// all subsets of [0, n) of size exactly k, lexicographic
template <class F>
void for_each_combination(int n, int k, F&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) {
    fn(idx);
    return;
  }
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

// all subsets of [0, n) with size <= L
template <class F>
void for_each_subset(int n, int L, F&& fn) {
  for (int k = 0; k <= std::min(n, L); ++k) for_each_combination(n, k, fn);
}

inline std::vector<int> map_through(const std::vector<int>& universe,
                                    const std::vector<int>& picks) {
  std::vector<int> out;
  out.reserve(picks.size());
  for (int i : picks) out.push_back(universe[static_cast<size_t>(i)]);
  return out;
}

inline void absorb_tuple(AuditReport& rep, long long actual, const Rat& expected, Json wit) {
  wit["actual"] = actual;
  wit["expected"] = rat_str(expected);
  Rat ratio;
  if (tuple_ratio(actual, expected, ratio))
    rep.absorb(ratio, wit);
  else
    rep.absorb_infinite(wit);
}

// pass iff |actual - expected| <= gamma * (expected + slack)
inline void absorb_slack_tuple(AuditReport& rep, const Rat& actual, const Rat& expected,
                               const Rat& slack, Json wit) {
  wit["actual"] = rat_str(actual);
  wit["expected"] = rat_str(expected);
  Rat denom = expected + slack;
  if (denom == 0) {
    if (actual == expected)
      rep.absorb(Rat(0), wit);
    else
      rep.absorb_infinite(wit);
    return;
  }
  rep.absorb(rat_abs(actual - expected) / denom, wit);
}

// evaluation core for indexed-pair quasirandomness; the universe is the set
// of paired vertices, anything else on the host is ignored
struct IndexCore {
  const Graph* h = nullptr;
  long long n = 0;  // formula vertex count = 2 * npairs
  int npairs = 0;
  std::vector<int> minus_host, plus_host;
  std::vector<int> side;  // host -> 0/1, -1 outside the universe
  std::vector<int> univ_list;
  std::vector<Bits> idx_um, idx_up;   // per used-set: pair indices hit
  std::vector<long long> used_count;  // |U_l| within the universe
  std::vector<int> anchor_owner;      // anchors position -> used index
  std::vector<Bits> anchor_bits;      // over [npairs]
  std::vector<long long> anchor_count;

  int nused() const { return static_cast<int>(idx_um.size()); }
  int nanchors() const { return static_cast<int>(anchor_bits.size()); }

  Bits idx_of_nbhd(const Bits& nb, bool minus_side) const {
    Bits out(npairs);
    const std::vector<int>& hostv = minus_side ? minus_host : plus_host;
    for (int i = 0; i < npairs; ++i)
      if (nb.test(hostv[static_cast<size_t>(i)])) out.set(i);
    return out;
  }
};

inline IndexCore build_index_core(const Graph& h, const TerminalPairing& pairing,
                                  const std::vector<Bits>& used,
                                  const std::vector<std::pair<int, std::vector<int>>>& anchors,
                                  bool strict) {
  IndexCore c;
  c.h = &h;
  c.npairs = pairing.npairs();
  if (c.npairs == 0) throw SizeMismatch("index audit: empty pairing");
  if (strict) {
    if (pairing.box_dot != -1) throw SizeMismatch("index audit: spare vertex present");
    if (2 * c.npairs != h.n) throw SizeMismatch("index audit: pairing does not cover the host");
  }
  c.n = 2LL * c.npairs;
  c.side.assign(static_cast<size_t>(h.n), -1);
  for (int i = 0; i < c.npairs; ++i) {
    auto [mv, pv] = pairing.pairs[static_cast<size_t>(i)];
    if (mv < 0 || mv >= h.n || pv < 0 || pv >= h.n)
      throw SizeMismatch("index audit: pair vertex out of range");
    if (c.side[static_cast<size_t>(mv)] != -1 || c.side[static_cast<size_t>(pv)] != -1 || mv == pv)
      throw SizeMismatch("index audit: pairing reuses a vertex");
    c.side[static_cast<size_t>(mv)] = 0;
    c.side[static_cast<size_t>(pv)] = 1;
    c.minus_host.push_back(mv);
    c.plus_host.push_back(pv);
  }
  for (int v = 0; v < h.n; ++v)
    if (c.side[static_cast<size_t>(v)] != -1) c.univ_list.push_back(v);

  for (const Bits& ub : used) {
    if (ub.n != h.n) throw SizeMismatch("index audit: used set size mismatch");
    Bits um(c.npairs), up(c.npairs);
    long long cnt = 0;
    for (int i = 0; i < c.npairs; ++i) {
      if (ub.test(c.minus_host[static_cast<size_t>(i)])) {
        um.set(i);
        ++cnt;
      }
      if (ub.test(c.plus_host[static_cast<size_t>(i)])) {
        up.set(i);
        ++cnt;
      }
    }
    c.idx_um.push_back(std::move(um));
    c.idx_up.push_back(std::move(up));
    c.used_count.push_back(cnt);
  }
  std::vector<char> seen(used.size(), 0);
  for (auto& [owner, aset] : anchors) {
    if (owner < 0 || owner >= static_cast<int>(used.size()))
      throw SizeMismatch("index audit: anchor owner out of range");
    if (seen[static_cast<size_t>(owner)]++)
      throw SizeMismatch("index audit: duplicate anchor owner");
    Bits ab(c.npairs);
    for (int i : aset) {
      if (i < 0 || i >= c.npairs) throw SizeMismatch("index audit: anchor index out of range");
      ab.set(i);
    }
    c.anchor_owner.push_back(owner);
    c.anchor_count.push_back(ab.count());
    c.anchor_bits.push_back(std::move(ab));
  }
  return c;
}

AuditReport core_audit_index(const IndexCore& c, int L, const Rat& gamma, const Rat& d1,
                             const Rat& d2, long long budget, uint64_t seed);

}  // namespace gp::detail
