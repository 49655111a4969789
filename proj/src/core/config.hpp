#pragma once
#include <cstdint>
#include <string>

#include "core/rational.hpp"

namespace gp {

struct GammaLevels {
  Rat a{1, 100};
  Rat b{1, 50};    // parity stage inherits 2*a when unset
  Rat c{1, 1};     // partite stage inherits 100*a when unset
  Rat d{1, 20};
  Rat e{1, 10};
  Rat f{1, 5};
};

struct LLevels {
  int c = 2;
  int d = 2;
  int e = 2;
  int f = 2;
  int big = 7;  // the global L, defaults to 2*D + 3
};

struct Config {
  int n = 0;
  int D = 2;
  int D_odd = 1;
  Rat delta{1, 5};
  Rat d{1, 2};
  Rat lambda{0};
  Rat lambda_star{0};  // lambda for even n, lambda - 1/n for odd n
  Rat sigma0{0};
  Rat sigma1{0};
  Rat c{0};
  GammaLevels gamma_levels;
  LLevels L_levels;
  Rat xi_qr{1, 10};
  uint64_t seed = 0;
  int retries = 20;
  long long budget = 10000000;
  // greedy-stage use caps; negative means the ceil(n^e) default
  long long cap_sqrt = -1;   // e = 0.5
  long long cap_n06 = -1;    // e = 0.6
  long long cap_n03 = -1;    // e = 0.3
  int labelling_retries = 50;

  // integer-valued products required by the rounding conventions
  long long delta_n() const { return to_ll(Int(numerator(delta) * n / denominator(delta))); }
  long long lambda_n() const { return to_ll(Int(numerator(lambda) * n / denominator(lambda))); }
  long long sigma0_n() const { return to_ll(Int(numerator(sigma0) * n / denominator(sigma0))); }
  long long sigma1_n() const { return to_ll(Int(numerator(sigma1) * n / denominator(sigma1))); }
  long long lambda_star_n() const {
    return to_ll(Int(numerator(lambda_star) * n / denominator(lambda_star)));
  }

  bool integral(const Rat& r) const { return numerator(r) * n % denominator(r) == 0; }

  // smallest k with k^q >= n^p, i.e. ceil(n^{p/q}) for integer n
  static long long ceil_pow(long long n, int p, int q);

  long long use_cap_sqrt() const { return cap_sqrt >= 0 ? cap_sqrt : ceil_pow(n, 1, 2); }
  long long use_cap_n06() const { return cap_n06 >= 0 ? cap_n06 : ceil_pow(n, 3, 5); }
  long long use_cap_n03() const { return cap_n03 >= 0 ? cap_n03 : ceil_pow(n, 3, 10); }

  std::string validate() const;  // empty string when consistent
};

}  // namespace gp
