#include "core/instance.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace gp {

Json config_to_json(const Config& c) {
  Json j;
  j["n"] = c.n;
  j["D"] = c.D;
  j["D_odd"] = c.D_odd;
  j["delta"] = rat_to_json(c.delta);
  j["d"] = rat_to_json(c.d);
  j["lambda"] = rat_to_json(c.lambda);
  j["lambda_star"] = rat_to_json(c.lambda_star);
  j["sigma0"] = rat_to_json(c.sigma0);
  j["sigma1"] = rat_to_json(c.sigma1);
  j["c"] = rat_to_json(c.c);
  j["gamma_levels"] = {{"A", rat_to_json(c.gamma_levels.a)}, {"B", rat_to_json(c.gamma_levels.b)},
                       {"C", rat_to_json(c.gamma_levels.c)}, {"D", rat_to_json(c.gamma_levels.d)},
                       {"E", rat_to_json(c.gamma_levels.e)}, {"F", rat_to_json(c.gamma_levels.f)}};
  j["L_levels"] = {{"C", c.L_levels.c}, {"D", c.L_levels.d}, {"E", c.L_levels.e},
                   {"F", c.L_levels.f}, {"L", c.L_levels.big}};
  j["xi_qr"] = rat_to_json(c.xi_qr);
  j["seed"] = c.seed;
  j["retries"] = c.retries;
  j["budget"] = c.budget;
  return j;
}

Config config_from_json(const Json& j) {
  Config c;
  c.n = j.value("n", 0);
  c.D = j.value("D", 2);
  c.D_odd = j.value("D_odd", 1);
  auto rat = [&](const char* k, Rat dflt) { return j.contains(k) ? rat_from_json(j.at(k)) : dflt; };
  c.delta = rat("delta", c.delta);
  c.d = rat("d", c.d);
  c.lambda = rat("lambda", c.lambda);
  c.sigma0 = rat("sigma0", c.sigma0);
  c.sigma1 = rat("sigma1", c.sigma1);
  c.c = rat("c", c.c);
  if (j.contains("lambda_star")) c.lambda_star = rat_from_json(j.at("lambda_star"));
  else c.lambda_star = c.n % 2 == 0 ? c.lambda : c.lambda - Rat(1, c.n > 0 ? c.n : 1);
  if (j.contains("gamma_levels")) {
    const Json& g = j.at("gamma_levels");
    auto grat = [&](const char* k, Rat dflt) { return g.contains(k) ? rat_from_json(g.at(k)) : dflt; };
    c.gamma_levels.a = grat("A", c.gamma_levels.a);
    c.gamma_levels.b = grat("B", 2 * c.gamma_levels.a);
    c.gamma_levels.c = grat("C", 100 * c.gamma_levels.a);
    c.gamma_levels.d = grat("D", c.gamma_levels.d);
    c.gamma_levels.e = grat("E", c.gamma_levels.e);
    c.gamma_levels.f = grat("F", c.gamma_levels.f);
  } else {
    c.gamma_levels.b = 2 * c.gamma_levels.a;
    c.gamma_levels.c = 100 * c.gamma_levels.a;
  }
  if (j.contains("L_levels")) {
    const Json& l = j.at("L_levels");
    c.L_levels.c = l.value("C", c.L_levels.c);
    c.L_levels.d = l.value("D", c.L_levels.d);
    c.L_levels.e = l.value("E", c.L_levels.e);
    c.L_levels.f = l.value("F", c.L_levels.f);
    c.L_levels.big = l.value("L", 2 * c.D + 3);
  } else {
    c.L_levels.big = 2 * c.D + 3;
  }
  if (j.contains("xi_qr")) c.xi_qr = rat_from_json(j.at("xi_qr"));
  c.seed = j.value("seed", static_cast<uint64_t>(0));
  c.retries = j.value("retries", 20);
  c.budget = j.value("budget", static_cast<long long>(10000000));
  return c;
}

static Json guest_to_json(const GuestGraph& g) {
  Json j;
  Json edges = Json::array();
  for (auto [u, v] : g.graph.edge_list()) edges.push_back({u, v});
  j["n"] = g.graph.n;
  j["edges"] = edges;
  j["odd_vertices"] = g.odd_vertices;
  j["bare_paths"] = g.bare_paths;
  j["class"] = class_tag_name(g.class_tag);
  return j;
}

static GuestGraph guest_from_json(const Json& j) {
  GuestGraph g;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    edges.emplace_back(u, v);
    n = std::max({n, u + 1, v + 1});
  }
  if (j.contains("n")) n = std::max(n, j.at("n").get<int>());
  g.graph = Graph(n, edges);
  if (j.contains("odd_vertices")) g.odd_vertices = j.at("odd_vertices").get<std::vector<int>>();
  if (j.contains("bare_paths")) g.bare_paths = j.at("bare_paths").get<std::vector<std::vector<int>>>();
  g.class_tag = class_tag_parse(j.value("class", "other"));
  g.refresh_order();
  return g;
}

Json instance_to_json(const Instance& ins) {
  Json j;
  j["n"] = ins.n;
  Json host;
  host["type"] = ins.host.type;
  if (ins.host.type == "gnp") {
    host["p"] = rat_to_json(ins.host.p);
    host["seed"] = ins.host.seed;
  }
  j["host"] = host;
  Json guests = Json::array();
  for (const auto& g : ins.family.guests) guests.push_back(guest_to_json(g));
  j["guests"] = guests;
  j["config"] = config_to_json(ins.config);
  return j;
}

Instance instance_from_json(const Json& j) {
  Instance ins;
  ins.n = j.at("n").get<int>();
  if (j.contains("host")) {
    const Json& h = j.at("host");
    ins.host.type = h.value("type", "complete");
    if (h.contains("p")) ins.host.p = rat_from_json(h.at("p"));
    ins.host.seed = h.value("seed", static_cast<uint64_t>(0));
    if (ins.host.type != "complete" && ins.host.type != "gnp")
      throw ParseError("unknown host type '" + ins.host.type + "'");
  }
  for (const auto& gj : j.at("guests")) ins.family.guests.push_back(guest_from_json(gj));
  for (size_t s = 0; s < ins.family.guests.size(); ++s) {
    switch (ins.family.guests[s].class_tag) {
      case ClassTag::K: ins.family.K.push_back(static_cast<int>(s)); break;
      case ClassTag::J0: ins.family.J0.push_back(static_cast<int>(s)); break;
      case ClassTag::J1: ins.family.J1.push_back(static_cast<int>(s)); break;
      case ClassTag::J2: ins.family.J2.push_back(static_cast<int>(s)); break;
      default: break;
    }
  }
  if (j.contains("config")) ins.config = config_from_json(j.at("config"));
  if (ins.config.n == 0) ins.config.n = ins.n;
  ins.family.params = ins.config;
  return ins;
}

Graph build_host(const HostSpec& spec, int n) {
  if (spec.type == "complete") return Graph::complete(n);
  // gnp: edge uv present iff a fresh 64-bit draw falls below p, exactly
  Graph g(n);
  Rng rng(spec.seed);
  Int num = numerator(spec.p), den = denominator(spec.p);
  Int scale = Int(1) << 64;
  Int thresh = num * scale / den;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (Int(rng.next()) < thresh) g.add_edge(u, v);
  return g;
}

Json packing_to_json(const PackingState& st) {
  Json assigns = Json::array();
  for (size_t s = 0; s < st.embeddings.size(); ++s) {
    const auto& e = st.embeddings[s];
    Json map = Json::array();
    for (size_t x = 0; x < e.map.size(); ++x)
      if (e.map[x] >= 0) map.push_back({static_cast<int>(x), e.map[x]});
    assigns.push_back({{"guest", static_cast<int>(s)}, {"map", map}});
  }
  return Json{{"assignments", assigns}};
}

void packing_apply_json(const Json& j, const GuestFamily& f, PackingState& st) {
  for (const auto& a : j.at("assignments")) {
    int s = a.at("guest").get<int>();
    if (s < 0 || s >= static_cast<int>(f.guests.size())) throw ParseError("guest index out of range");
    const GuestGraph& g = f.guests[static_cast<size_t>(s)];
    for (const auto& kv : a.at("map")) {
      int x = kv.at(0).get<int>(), v = kv.at(1).get<int>();
      st.place(g, s, x, v);
    }
  }
}

std::string instance_hash(const Instance& ins) {
  return hex64(fnv1a(instance_to_json(ins).dump()));
}

}  // namespace gp
