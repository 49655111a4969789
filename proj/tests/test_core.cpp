#include <doctest.h>

#include <set>

#include "core/graph.hpp"
#include "core/instance.hpp"
#include "core/jsonutil.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

using namespace gp;

TEST_SUITE("core") {

TEST_CASE("rng determinism and split independence") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng c(42);
  Rng c1 = c.split(1), c2 = c.split(2);
  CHECK(c1.next() != c2.next());
  // splitting never advances the parent
  Rng d(42);
  (void)d.split(7);
  Rng e(42);
  CHECK(d.next() == e.next());
}

TEST_CASE("rng below is unbiased over small range") {
  Rng r(7);
  std::vector<int> hits(5, 0);
  for (int i = 0; i < 50000; ++i) ++hits[static_cast<size_t>(r.below(5))];
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);
}

TEST_CASE("sample_indices uniform subsets") {
  Rng r(3);
  auto s = r.sample_indices(10, 4);
  CHECK(s.size() == 4);
  CHECK(std::set<int>(s.begin(), s.end()).size() == 4);
  for (int x : s) CHECK(x < 10);
}

TEST_CASE("int_root and ceil_pow_frac") {
  CHECK(int_root(Int(26), 2) == 5);
  CHECK(int_root(Int(27), 3) == 3);
  CHECK(int_root(Int(26), 3) == 2);
  // ceil(300^0.5) = 18 since 17^2=289 < 300 <= 18^2=324
  CHECK(ceil_pow_frac(300, 1, 2) == 18);
  // ceil(300^0.6): 300^3 = 2.7e7, x^5 >= 2.7e7 -> x = 31 (30^5=2.43e7 < 2.7e7 <= 31^5=2.86e7)
  CHECK(ceil_pow_frac(300, 3, 5) == 31);
  // ceil(1000^0.99) via 99/100
  Int v = ceil_pow_frac(1000, 99, 100);
  CHECK(int_pow(v, 100) >= int_pow(Int(1000), 99));
  CHECK(int_pow(v - 1, 100) < int_pow(Int(1000), 99));
}

TEST_CASE("binomial") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(60, 2) == 1770);
  CHECK(binom(4, 7) == 0);
}

TEST_CASE("rational parsing exactness") {
  CHECK(rat_from_string("1/5") == Rat(1, 5));
  CHECK(rat_from_string("0.2") == Rat(1, 5));
  CHECK(rat_from_string("-1.25e-1") == Rat(-1, 8));
  CHECK(rat_from_json(Json(3)) == Rat(3));
  CHECK(rat_from_json(Json("7/3")) == Rat(7, 3));
  CHECK(rat_str(Rat(1, 5)) == "1/5");
}

TEST_CASE("bits ops") {
  Bits b(130);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(b.count() == 3);
  Bits c(130);
  c.set(64);
  CHECK(b.and_count(c) == 1);
  CHECK(b.andnot_count(c) == 2);
  b.set_all();
  CHECK(b.count() == 130);
}

TEST_CASE("graph basics") {
  Graph g = Graph::complete(5);
  CHECK(g.edge_count() == 10);
  CHECK(g.degree(0) == 4);
  g.remove_edge(0, 1);
  CHECK(g.edge_count() == 9);
  CHECK(!g.has_edge(0, 1));
  auto cn = g.common_neighbors({0, 1});
  CHECK(cn.count() == 3);
  CHECK(g.common_neighbors({}).count() == 5);
  Graph p = Graph::path(4);
  CHECK(p.edge_count() == 3);
  CHECK(p.connected());
  p.remove_edge(1, 2);
  CHECK(!p.connected());
}

TEST_CASE("edges within and between") {
  Graph g = Graph::complete(6);
  Bits s(6), t(6);
  s.set(0);
  s.set(1);
  s.set(2);
  t.set(3);
  t.set(4);
  CHECK(g.edges_within(s) == 3);
  CHECK(g.edges_between(s, t) == 6);
}

TEST_CASE("gnp host determinism and density") {
  HostSpec spec;
  spec.type = "gnp";
  spec.p = Rat(1, 2);
  spec.seed = 11;
  Graph g1 = build_host(spec, 200);
  Graph g2 = build_host(spec, 200);
  CHECK(g1.edge_count() == g2.edge_count());
  CHECK(g1.edge_list() == g2.edge_list());
  double density = static_cast<double>(g1.edge_count()) / (200.0 * 199 / 2);
  CHECK(density > 0.45);
  CHECK(density < 0.55);
}

TEST_CASE("config json round trip") {
  Json j = {{"n", 60},          {"D", 2},          {"D_odd", 1},       {"delta", "1/5"},
            {"lambda", "1/15"}, {"sigma0", "1/60"}, {"sigma1", "1/60"}, {"c", "3"},
            {"seed", 5},        {"retries", 9}};
  Config c = config_from_json(j);
  CHECK(c.lambda_n() == 4);
  CHECK(c.sigma0_n() == 1);
  CHECK(c.delta_n() == 12);
  CHECK(c.gamma_levels.b == 2 * c.gamma_levels.a);
  CHECK(c.gamma_levels.c == 100 * c.gamma_levels.a);
  CHECK(c.L_levels.big == 7);
  CHECK(c.validate().empty());
  Config c2 = config_from_json(config_to_json(c));
  CHECK(c2.lambda == c.lambda);
  CHECK(c2.seed == c.seed);
  CHECK(c2.retries == 9);
  CHECK(config_to_json(c2) == config_to_json(c));
}

}  // TEST_SUITE
