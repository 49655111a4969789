#include "core/jsonutil.hpp"

#include <cctype>

#include "core/error.hpp"

namespace gp {

// parse a decimal literal (optional sign, fraction, exponent) into an exact rational
static Rat rat_from_decimal(const std::string& s) {
  size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  Int num = 0;
  long long frac_digits = 0, expo = 0;
  bool any = false;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    num = num * 10 + (s[i++] - '0');
    any = true;
  }
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      num = num * 10 + (s[i++] - '0');
      ++frac_digits;
      any = true;
    }
  }
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = s[i++] == '-';
    long long e = 0;
    if (i >= s.size()) throw ParseError("bad exponent in '" + s + "'");
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
    expo = eneg ? -e : e;
  }
  if (!any || i != s.size()) throw ParseError("bad rational literal '" + s + "'");
  Rat r(num, 1);
  long long shift = expo - frac_digits;
  if (shift > 0) r *= Rat(int_pow(10, static_cast<unsigned>(shift)), 1);
  if (shift < 0) r /= Rat(int_pow(10, static_cast<unsigned>(-shift)), 1);
  return neg ? Rat(-r) : r;
}

Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return rat_from_decimal(s);
  Int p(s.substr(0, slash)), q(s.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rat(p, q);
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>(), 1);
  if (j.is_number_float()) return rat_from_decimal(j.dump());
  throw ParseError("expected rational, got " + j.dump());
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(uint64_t x) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<size_t>(i)] = digits[x & 15];
    x >>= 4;
  }
  return out;
}

}  // namespace gp
