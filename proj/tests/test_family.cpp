#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "core/error.hpp"
#include "core/family.hpp"
#include "core/rng.hpp"

using namespace gp;

namespace {

// maximal planar graph via repeated random face subdivision
Graph random_triangulation(int n, Rng& rng) {
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 2}};
  for (int v = 3; v < n; ++v) {
    size_t fi = rng.below(faces.size());
    auto [a, b, c] = faces[fi];
    g.add_edge(v, a);
    g.add_edge(v, b);
    g.add_edge(v, c);
    faces[fi] = {a, b, v};
    faces.push_back({a, c, v});
    faces.push_back({b, c, v});
  }
  return g;
}

int witness_of_order(const Graph& g, const std::vector<int>& order) {
  std::vector<int> pos(static_cast<size_t>(g.n));
  for (int i = 0; i < g.n; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
  int w = 0;
  for (int v = 0; v < g.n; ++v) {
    int back = 0;
    for (int u : g.neighbor_list(v))
      if (pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)]) ++back;
    w = std::max(w, back);
  }
  return w;
}

GuestGraph tree_guest(const Graph& g) {
  GuestGraph t;
  t.graph = g;
  t.refresh_order();
  return t;
}

}  // namespace

TEST_SUITE("family") {

TEST_CASE("degeneracy of simple graphs") {
  CHECK(degeneracy_order(Graph::path(3)).second == 1);
  CHECK(degeneracy_order(Graph::complete(4)).second == 3);
  CHECK(degeneracy_order(Graph(0)).second == 0);
  CHECK(degeneracy_order(Graph(5)).second == 0);
}

TEST_CASE("degeneracy order witnesses D") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g(12);
    for (int u = 0; u < 12; ++u)
      for (int v = u + 1; v < 12; ++v)
        if (rng.below(3) == 0) g.add_edge(u, v);
    auto [order, D] = degeneracy_order(g);
    CHECK(witness_of_order(g, order) <= D);
  }
}

TEST_CASE("degeneracy minimal against brute force on small graphs") {
  Rng rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    int n = 4 + static_cast<int>(rng.below(4));  // 4..7
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.coin()) g.add_edge(u, v);
    auto [order, D] = degeneracy_order(g);
    CHECK(witness_of_order(g, order) <= D);
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = n;
    do best = std::min(best, witness_of_order(g, perm));
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(D == best);
  }
}

TEST_CASE("random planar triangulation is at most 5-degenerate") {
  Rng rng(5);
  Graph g = random_triangulation(50, rng);
  CHECK(g.edge_count() == 3 * 50 - 6);
  CHECK(degeneracy_order(g).second <= 5);
}

TEST_CASE("bare paths on long path") {
  // frozen oracle values: 100-path -> 8, 311-path -> 25
  auto t = tree_guest(Graph::path(100));
  auto paths = find_bare_paths(t, 11, 100);
  CHECK(paths.size() == 8);
  for (const auto& p : paths) {
    CHECK(p.size() == 12);
    for (size_t i = 0; i + 1 < p.size(); ++i) CHECK(t.graph.has_edge(p[i], p[i + 1]));
    for (size_t i = 1; i + 1 < p.size(); ++i) CHECK(t.graph.degree(p[i]) == 2);
  }
  Bits used(100);
  for (const auto& p : paths)
    for (int v : p) {
      CHECK(!used.test(v));
      used.set(v);
    }
  CHECK(find_bare_paths(tree_guest(Graph::path(311)), 11, 1000).size() == 25);
  CHECK(find_bare_paths(t, 11, 3).size() == 3);
}

TEST_CASE("bare paths degenerate cases") {
  // star: no degree-2 vertices at all
  Graph star(10);
  for (int v = 1; v < 10; ++v) star.add_edge(0, v);
  CHECK(find_bare_paths(tree_guest(star), 11, 1).empty());
  // 12-vertex path: stripped component has 10 < 50 vertices
  CHECK(find_bare_paths(tree_guest(Graph::path(12)), 11, 1).empty());
  // spider with three 40-vertex legs: components of 39 < 50 (frozen oracle: 0)
  Graph spider(121);
  int nxt = 1;
  for (int leg = 0; leg < 3; ++leg) {
    int prev = 0;
    for (int i = 0; i < 40; ++i) {
      spider.add_edge(prev, nxt);
      prev = nxt++;
    }
  }
  CHECK(find_bare_paths(tree_guest(spider), 11, 5).empty());
  // 200-path with a pendant at vertex 100 (frozen oracle: 16)
  Graph cat = Graph::path(200);
  Graph cat2(201, cat.edge_list());
  cat2.add_edge(100, 200);
  CHECK(find_bare_paths(tree_guest(cat2), 11, 100).size() == 16);
}

TEST_CASE("bare paths rejects non-trees") {
  Graph cyc(4);
  cyc.add_edge(0, 1);
  cyc.add_edge(1, 2);
  cyc.add_edge(2, 3);
  cyc.add_edge(3, 0);
  CHECK_THROWS_AS(find_bare_paths(tree_guest(cyc), 11, 1), NotATree);
  Graph forest(4);
  forest.add_edge(0, 1);
  forest.add_edge(2, 3);
  CHECK_THROWS_AS(find_bare_paths(tree_guest(forest), 11, 1), NotATree);
}

TEST_CASE("classify flags missing J") {
  GuestFamily f;
  f.params.n = 10;
  f.params.lambda = Rat(1, 5);
  f.params.c = Rat(10);
  for (int i = 0; i < 10; ++i) {
    GuestGraph g;
    g.graph = Graph(2, {{0, 1}});
    g.refresh_order();
    f.guests.push_back(g);
  }
  auto rep = classify_family(f);
  CHECK(!rep.pass);
  bool found = false;
  for (const auto& v : rep.violations) found |= v.condition == "|J| >= alpha*n";
  CHECK(found);
}

TEST_CASE("classify flags adjacent odd vertices") {
  GuestFamily f;
  f.params.n = 4;
  f.params.lambda = Rat(0);
  f.params.c = Rat(10);
  f.params.D_odd = 1;
  GuestGraph g;
  g.graph = Graph(2, {{0, 1}});
  g.odd_vertices = {0, 1};
  g.refresh_order();
  f.guests.push_back(g);
  f.K = {0};
  auto rep = classify_family(f);
  CHECK(!rep.pass);
  bool found = false;
  for (const auto& v : rep.violations) found |= v.condition == "(e) independent set";
  CHECK(found);
}

}  // TEST_SUITE
