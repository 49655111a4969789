#pragma once
#include <cstdint>
#include <vector>
#include <bit>

namespace gp {

// fixed-size dynamic bitset tuned for neighbourhood intersections
struct Bits {
  int n = 0;
  std::vector<uint64_t> w;

  Bits() = default;
  explicit Bits(int n_) : n(n_), w(static_cast<size_t>((n_ + 63) / 64), 0) {}

  void set(int i) { w[static_cast<size_t>(i >> 6)] |= 1ULL << (i & 63); }
  void reset(int i) { w[static_cast<size_t>(i >> 6)] &= ~(1ULL << (i & 63)); }
  bool test(int i) const { return (w[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1; }

  void set_all() {
    for (auto& x : w) x = ~0ULL;
    trim();
  }
  void clear() { for (auto& x : w) x = 0; }
  void trim() {
    if (n & 63) w.back() &= (1ULL << (n & 63)) - 1;
  }

  int count() const {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }

  Bits& operator&=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  Bits& operator|=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    return *this;
  }
  // this &= ~o
  Bits& andnot(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
    return *this;
  }

  int and_count(const Bits& o) const {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & o.w[i]);
    return c;
  }
  int andnot_count(const Bits& o) const {
    int c = 0;
    for (size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & ~o.w[i]);
    return c;
  }

  bool any() const {
    for (uint64_t x : w) if (x) return true;
    return false;
  }

  std::vector<int> to_list() const {
    std::vector<int> out;
    for (size_t i = 0; i < w.size(); ++i) {
      uint64_t x = w[i];
      while (x) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(x));
        x &= x - 1;
      }
    }
    return out;
  }

  bool operator==(const Bits& o) const { return n == o.n && w == o.w; }
};

}  // namespace gp
