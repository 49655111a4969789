#include "core/config.hpp"

namespace gp {

std::string Config::validate() const {
  if (n < 0) return "n negative";
  for (auto [r, name] : {std::pair<const Rat*, const char*>{&delta, "delta"},
                         {&d, "d"},
                         {&lambda, "lambda"},
                         {&sigma0, "sigma0"},
                         {&sigma1, "sigma1"},
                         {&c, "c"}}) {
    if (*r < 0) return std::string(name) + " negative";
  }
  if (n > 0) {
    if (!integral(lambda)) return "lambda*n not integral";
    if (!integral(sigma0)) return "sigma0*n not integral";
    if (!integral(sigma1)) return "sigma1*n not integral";
    if (!integral(delta)) return "delta*n not integral";
  }
  if (retries < 0 || budget < 0) return "retries/budget negative";
  return "";
}

long long Config::ceil_pow(long long n, int p, int q) {
  if (n <= 1) return n < 0 ? 0 : n;
  auto pow_ge = [](long long base, int e, __int128 target) {
    __int128 acc = 1;
    for (int i = 0; i < e; ++i) {
      acc *= base;
      if (acc >= target) return true;
    }
    return acc >= target;
  };
  __int128 target = 1;
  for (int i = 0; i < p; ++i) target *= n;
  long long lo = 1, hi = n;
  while (lo < hi) {
    long long mid = lo + (hi - lo) / 2;
    if (pow_ge(mid, q, target)) hi = mid; else lo = mid + 1;
  }
  return lo;
}

}  // namespace gp
