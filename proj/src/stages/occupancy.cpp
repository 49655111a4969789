#include "stages/occupancy.hpp"

#include <string>

#include "core/error.hpp"

namespace gp {

void check_moderately_balanced(const std::vector<char>& odd, const OccRequirement& req) {
  const long long x = static_cast<long long>(odd.size());
  if (req.total() != 7 * x)
    throw NotBalanced("a", "N1+N2+N3 = " + std::to_string(req.total()) + ", want 7|X| = " +
                               std::to_string(7 * x));
  if (req.n2 < 3 * x || req.n2 > 4 * x || req.n1 < x || req.n3 < x)
    throw NotBalanced("b", "N = (" + std::to_string(req.n1) + ", " + std::to_string(req.n2) +
                               ", " + std::to_string(req.n3) + ") against |X| = " +
                               std::to_string(x));
  long long nodd = 0;
  for (char o : odd) nodd += o ? 1 : 0;
  if (((req.n2 ^ nodd) & 1) != 0)
    throw NotBalanced("c", "N2 = " + std::to_string(req.n2) + " vs " + std::to_string(nodd) +
                               " odd slots");
}

std::vector<std::array<long long, 3>> occupancy_assign(const std::vector<char>& odd,
                                                       const OccRequirement& req) {
  try {
    check_moderately_balanced(odd, req);
  } catch (const NotBalanced& e) {
    throw PreconditionViolated(e.what());
  }
  const size_t x = odd.size();
  std::vector<std::array<long long, 3>> aleph(x);
  long long col2 = 0;
  for (size_t k = 0; k < x; ++k) {
    aleph[k] = {1, odd[k] ? 3LL : 2LL, 1};
    col2 += aleph[k][1];
  }
  while (col2 < req.n2) {
    size_t t = 0;
    for (size_t k = 1; k < x; ++k)
      if (aleph[k][1] < aleph[t][1]) t = k;
    aleph[t][1] += 2;
    col2 += 2;
  }
  long long total = 0, col1 = 0, col3 = 0;
  for (const auto& a : aleph) {
    total += a[0] + a[1] + a[2];
    col1 += a[0];
    col3 += a[2];
  }
  size_t t = 0;
  while (total < req.total()) {
    while (t < x && aleph[t][0] + aleph[t][1] + aleph[t][2] >= 7) ++t;
    if (t == x) throw PreconditionViolated("all rows full with columns open");
    int j = col1 < req.n1 ? 0 : (col2 < req.n2 ? 1 : 2);
    aleph[t][j] += 1;
    (j == 0 ? col1 : j == 1 ? col2 : col3) += 1;
    ++total;
  }
  for (size_t k = 0; k < x; ++k) {
    const auto& a = aleph[k];
    bool ok = a[0] >= 1 && a[2] >= 1 && a[1] >= 2 && a[0] + a[1] + a[2] == 7 &&
              ((a[1] & 1) == (odd[k] ? 1 : 0));
    if (!ok)
      throw PreconditionViolated("row " + std::to_string(k) + " violates the occupancy shape");
  }
  if (col1 != req.n1 || col2 != req.n2 || col3 != req.n3)
    throw PreconditionViolated("column sums missed the requirement");
  return aleph;
}

namespace {

struct XiRow {
  long long a1, a2, a3;
  uint8_t mask;  // bit i set = x_{i+1} on the listed side
};

constexpr uint8_t bits(std::initializer_list<int> xs) {
  uint8_t m = 0;
  for (int v : xs) m = static_cast<uint8_t>(m | (1u << (v - 1)));
  return m;
}

// listed side is V- for minus-minus and crossing tables, V+ for plus-plus
const XiRow kMMDown[] = {
    {1, 2, 4, bits({1, 2, 8})},       {1, 4, 2, bits({1, 2, 4, 8})},
    {2, 2, 3, bits({1, 2, 3, 8})},    {2, 4, 1, bits({1, 2, 3, 5, 8})},
    {3, 2, 2, bits({1, 2, 3, 4, 8})}, {4, 2, 1, bits({1, 2, 3, 4, 5, 8})},
};
const XiRow kMMUp[] = {
    {1, 2, 4, bits({1, 7, 8})},       {1, 4, 2, bits({1, 5, 7, 8})},
    {2, 2, 3, bits({1, 6, 7, 8})},    {2, 4, 1, bits({1, 4, 6, 7, 8})},
    {3, 2, 2, bits({1, 5, 6, 7, 8})}, {4, 2, 1, bits({1, 4, 5, 6, 7, 8})},
};
const XiRow kPPDown[] = {
    {4, 2, 1, bits({1, 2, 8})},       {2, 4, 1, bits({1, 2, 4, 8})},
    {3, 2, 2, bits({1, 2, 3, 8})},    {1, 4, 2, bits({1, 2, 3, 5, 8})},
    {2, 2, 3, bits({1, 2, 3, 4, 8})}, {1, 2, 4, bits({1, 2, 3, 4, 5, 8})},
};
const XiRow kPPUp[] = {
    {4, 2, 1, bits({1, 7, 8})},       {2, 4, 1, bits({1, 5, 7, 8})},
    {3, 2, 2, bits({1, 6, 7, 8})},    {1, 4, 2, bits({1, 4, 6, 7, 8})},
    {2, 2, 3, bits({1, 5, 6, 7, 8})}, {1, 2, 4, bits({1, 4, 5, 6, 7, 8})},
};
const XiRow kMPDown[] = {
    {1, 3, 3, bits({1, 2, 4})},
    {1, 5, 1, bits({1, 2, 4, 6})},
    {2, 3, 2, bits({1, 2, 3, 5})},
    {3, 3, 1, bits({1, 2, 3, 4, 6})},
};
const XiRow kMPUp[] = {
    {1, 3, 3, bits({1, 6, 7})},
    {1, 5, 1, bits({1, 4, 6, 7})},
    {2, 3, 2, bits({1, 5, 6, 7})},
    {3, 3, 1, bits({1, 4, 5, 6, 7})},
};

std::pair<const XiRow*, size_t> table_of(AnchorSides sides, OccVariant variant) {
  switch (sides) {
    case AnchorSides::MinusMinus:
      return variant == OccVariant::Down ? std::pair<const XiRow*, size_t>{kMMDown, 6}
                                         : std::pair<const XiRow*, size_t>{kMMUp, 6};
    case AnchorSides::PlusPlus:
      return variant == OccVariant::Down ? std::pair<const XiRow*, size_t>{kPPDown, 6}
                                         : std::pair<const XiRow*, size_t>{kPPUp, 6};
    case AnchorSides::MinusPlus:
      return variant == OccVariant::Down ? std::pair<const XiRow*, size_t>{kMPDown, 4}
                                         : std::pair<const XiRow*, size_t>{kMPUp, 4};
  }
  return {nullptr, 0};
}

}  // namespace

std::array<int, 8> xi_from_tables(AnchorSides sides, const std::array<long long, 3>& aleph,
                                  OccVariant variant) {
  auto [rows, count] = table_of(sides, variant);
  const int listed = sides == AnchorSides::PlusPlus ? 1 : 0;
  for (size_t r = 0; r < count; ++r) {
    if (rows[r].a1 != aleph[0] || rows[r].a2 != aleph[1] || rows[r].a3 != aleph[2]) continue;
    std::array<int, 8> out{};
    for (int i = 0; i < 8; ++i)
      out[static_cast<size_t>(i)] = (rows[r].mask >> i) & 1 ? listed : 1 - listed;
    return out;
  }
  throw UnknownRow("(" + std::to_string(aleph[0]) + ", " + std::to_string(aleph[1]) + ", " +
                   std::to_string(aleph[2]) + ") is not a row of this table");
}

std::vector<std::array<long long, 3>> xi_table_rows(AnchorSides sides, OccVariant variant) {
  auto [rows, count] = table_of(sides, variant);
  std::vector<std::array<long long, 3>> out;
  for (size_t r = 0; r < count; ++r) out.push_back({rows[r].a1, rows[r].a2, rows[r].a3});
  return out;
}

}  // namespace gp
