#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace gp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_str(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

inline Int int_pow(Int base, unsigned e) {
  Int r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  return Rat(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

inline Int binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// largest r >= 0 with r^k <= x (x >= 0, k >= 1)
inline Int int_root(const Int& x, unsigned k) {
  if (x <= 0) return 0;
  if (k == 1) return x;
  Int lo = 0, hi = 1;
  while (int_pow(hi, k) <= x) hi <<= 1;
  while (lo + 1 < hi) {
    Int mid = (lo + hi) / 2;
    if (int_pow(mid, k) <= x) lo = mid;
    else hi = mid;
  }
  return lo;
}

// smallest integer m with m^den >= n^num, i.e. ceil(n^(num/den))
inline Int ceil_pow_frac(long long n, unsigned num, unsigned den) {
  if (n <= 0) return 0;
  Int target = int_pow(Int(n), num);
  Int r = int_root(target, den);
  if (int_pow(r, den) < target) ++r;
  return r;
}

// n^(num/den) as an exact comparison helper: returns true iff a >= n^(num/den),
// i.e. a^den >= n^num, for nonnegative a
inline bool geq_pow_frac(const Int& a, long long n, unsigned num, unsigned den) {
  if (a < 0) return false;
  return int_pow(a, den) >= int_pow(Int(n), num);
}

inline long long to_ll(const Int& x) { return x.convert_to<long long>(); }
inline double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace gp
