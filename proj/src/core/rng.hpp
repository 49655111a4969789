#pragma once
#include <cstdint>
#include <vector>
#include <algorithm>

namespace gp {

// Splittable 64-bit generator built on the splitmix64 mixer.  A generator is
// identified by (key, counter); split(label) derives an independent child key
// from the parent key and the label without advancing the parent, so the
// stream layout is a pure function of the root seed regardless of how many
// worker threads consume which child.
struct Rng {
  uint64_t key = 0;
  uint64_t ctr = 0;

  explicit Rng(uint64_t seed = 0) : key(seed) {}

  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t next() {
    // distinct invocations see distinct (key, ctr) pairs
    uint64_t z = key + 0x9e3779b97f4a7c15ULL * ++ctr;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  Rng split(uint64_t label) const {
    return Rng(mix(key ^ mix(label ^ 0xd1b54a32d192ed03ULL)));
  }

  // unbiased uniform in [0, n)
  uint64_t below(uint64_t n) {
    if (n <= 1) return 0;
    uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do { x = next(); } while (x >= lim);
    return x % n;
  }

  int below_int(int n) { return static_cast<int>(below(static_cast<uint64_t>(n))); }

  double uniform01() { return (next() >> 11) * 0x1.0p-53; }

  bool coin() { return next() & 1; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

  // uniform k-subset of [0, n) in increasing order (Floyd's algorithm)
  std::vector<int> sample_indices(int n, int k) {
    std::vector<int> out;
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int j = n - k; j < n; ++j) {
      int t = below_int(j + 1);
      if (in[t]) t = j;
      in[t] = 1;
      out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

}  // namespace gp
