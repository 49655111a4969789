#include <doctest.h>

#include <algorithm>
#include <vector>

#include "core/matching.hpp"
#include "core/rng.hpp"

using namespace gp;

namespace {

// single-augmenting-path oracle for cross-checking the matching size
int kuhn_size(const std::vector<std::vector<int>>& adj, int nright) {
  std::vector<int> match_right((size_t)nright, -1);
  std::vector<char> seen;
  auto tryk = [&](auto&& self, int l) -> bool {
    for (int r : adj[(size_t)l]) {
      if (seen[(size_t)r]) continue;
      seen[(size_t)r] = 1;
      if (match_right[(size_t)r] < 0 || self(self, match_right[(size_t)r])) {
        match_right[(size_t)r] = l;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int l = 0; l < (int)adj.size(); ++l) {
    seen.assign((size_t)nright, 0);
    if (tryk(tryk, l)) ++size;
  }
  return size;
}

void check_consistent(const std::vector<std::vector<int>>& adj, const MatchingResult& m) {
  int count = 0;
  for (size_t l = 0; l < m.match_left.size(); ++l) {
    int r = m.match_left[l];
    if (r < 0) continue;
    ++count;
    CHECK(m.match_right[(size_t)r] == (int)l);
    CHECK(std::find(adj[l].begin(), adj[l].end(), r) != adj[l].end());
  }
  CHECK(count == m.size);
}

}  // namespace

TEST_SUITE("matching") {

TEST_CASE("complete bipartite graph is perfectly matched") {
  std::vector<std::vector<int>> adj(5, {0, 1, 2, 3, 4});
  MatchingResult m = max_bipartite_matching(adj, 5);
  CHECK(m.size == 5);
  CHECK(m.covers_left());
  check_consistent(adj, m);
  CHECK(hall_violator(adj, 5, m).empty());
}

TEST_CASE("a starved neighbourhood yields a violating set") {
  std::vector<std::vector<int>> adj = {{0}, {0}, {0}, {1, 2}};
  MatchingResult m = max_bipartite_matching(adj, 3);
  CHECK(m.size == 2);
  CHECK(!m.covers_left());
  std::vector<int> s = hall_violator(adj, 3, m);
  REQUIRE(!s.empty());
  std::vector<char> nb(3, 0);
  int nsize = 0;
  for (int l : s)
    for (int r : adj[(size_t)l])
      if (!nb[(size_t)r]) {
        nb[(size_t)r] = 1;
        ++nsize;
      }
  CHECK(nsize < (int)s.size());
}

TEST_CASE("isolated left vertex is its own violator") {
  std::vector<std::vector<int>> adj = {{0, 1}, {}};
  MatchingResult m = max_bipartite_matching(adj, 2);
  CHECK(m.size == 1);
  std::vector<int> s = hall_violator(adj, 2, m);
  REQUIRE(s.size() == 1);
  CHECK(adj[(size_t)s[0]].empty());
}

TEST_CASE("random instances agree with the augmenting-path oracle") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Rng r(seed);
    std::vector<std::vector<int>> adj(30);
    for (int l = 0; l < 30; ++l)
      for (int rr = 0; rr < 30; ++rr)
        if (r.coin()) adj[(size_t)l].push_back(rr);
    MatchingResult m = max_bipartite_matching(adj, 30);
    CHECK(m.size == kuhn_size(adj, 30));
    check_consistent(adj, m);
    std::vector<int> s = hall_violator(adj, 30, m);
    if (m.covers_left()) {
      CHECK(s.empty());
    } else {
      REQUIRE(!s.empty());
      std::vector<char> nb(30, 0);
      int nsize = 0;
      for (int l : s)
        for (int rr : adj[(size_t)l])
          if (!nb[(size_t)rr]) {
            nb[(size_t)rr] = 1;
            ++nsize;
          }
      CHECK(nsize < (int)s.size());
    }
  }
}

}  // TEST_SUITE
