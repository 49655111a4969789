#include "designs/chest_types.hpp"

#include "core/error.hpp"

namespace gp {
namespace {

Json pairs_to_json(const std::vector<std::pair<int, int>>& es) {
  Json a = Json::array();
  for (auto& [x, y] : es) a.push_back(Json::array({x, y}));
  return a;
}

std::vector<std::pair<int, int>> pairs_from_json(const Json& a) {
  std::vector<std::pair<int, int>> es;
  for (auto& e : a) es.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
  return es;
}

}  // namespace

Json Chest::to_json() const {
  Json j;
  j["v"] = nv;
  j["u"] = nu;
  j["e1"] = pairs_to_json(e1);
  j["e2"] = pairs_to_json(e2);
  j["e3"] = pairs_to_json(e3);
  j["e4"] = pairs_to_json(e4);
  j["e5"] = pairs_to_json(e5);
  j["e6"] = pairs_to_json(e6);
  return j;
}

Chest Chest::from_json(const Json& j) {
  Chest c;
  c.nv = j.at("v").get<int>();
  c.nu = j.at("u").get<int>();
  c.e1 = pairs_from_json(j.at("e1"));
  c.e2 = pairs_from_json(j.at("e2"));
  c.e3 = pairs_from_json(j.at("e3"));
  c.e4 = pairs_from_json(j.at("e4"));
  c.e5 = pairs_from_json(j.at("e5"));
  c.e6 = pairs_from_json(j.at("e6"));
  return c;
}

ChestView::ChestView(const Chest& c) : nv(c.nv), nu(c.nu) {
  auto inside = [&](int x, int bound, const char* what) {
    if (x < 0 || x >= bound) throw Error("chest", std::string(what) + " endpoint out of range");
  };
  out1.assign(nv, Bits(nv));
  in1.assign(nv, Bits(nv));
  adj2.assign(nv, Bits(nv));
  adj3.assign(nv, Bits(nv));
  v4.assign(nv, Bits(nu));
  v5.assign(nv, Bits(nu));
  v6.assign(nv, Bits(nu));
  u4.assign(nu, Bits(nv));
  u5.assign(nu, Bits(nv));
  u6.assign(nu, Bits(nv));
  for (auto& [a, b] : c.e1) {
    inside(a, nv, "e1");
    inside(b, nv, "e1");
    if (a == b) throw Error("chest", "e1 loop");
    out1[a].set(b);
    in1[b].set(a);
  }
  auto undirected = [&](const std::vector<std::pair<int, int>>& es, std::vector<Bits>& adj,
                        const char* what) {
    for (auto& [a, b] : es) {
      inside(a, nv, what);
      inside(b, nv, what);
      if (a == b) throw Error("chest", std::string(what) + " loop");
      adj[a].set(b);
      adj[b].set(a);
    }
  };
  undirected(c.e2, adj2, "e2");
  undirected(c.e3, adj3, "e3");
  auto bip = [&](const std::vector<std::pair<int, int>>& es, std::vector<Bits>& vs,
                 std::vector<Bits>& us, const char* what) {
    for (auto& [v, u] : es) {
      inside(v, nv, what);
      inside(u, nu, what);
      vs[v].set(u);
      us[u].set(v);
    }
  };
  bip(c.e4, v4, u4, "e4");
  bip(c.e5, v5, u5, "e5");
  bip(c.e6, v6, u6, "e6");
}

Json Decomposition::to_json() const {
  Json a = Json::array();
  for (auto& d : diamonds) a.push_back(Json::array({d.v1, d.v2, d.v3, d.u}));
  Json j;
  j["diamonds"] = a;
  return j;
}

Decomposition Decomposition::from_json(const Json& j) {
  Decomposition d;
  for (auto& e : j.at("diamonds"))
    d.diamonds.push_back(
        {e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>()});
  return d;
}

}  // namespace gp
