#pragma once
#include <utility>
#include <vector>

#include "core/bits.hpp"
#include "core/jsonutil.hpp"

namespace gp {

// six-layer multigraph on V (size nv) and U (size nu):
//   e1 directed within V, e2/e3 undirected within V,
//   e4/e5/e6 undirected between V and U (stored as (v,u))
struct Chest {
  int nv = 0;
  int nu = 0;
  std::vector<std::pair<int, int>> e1, e2, e3, e4, e5, e6;

  Json to_json() const;
  static Chest from_json(const Json& j);
};

// fast membership/neighbourhood view over one chest
struct ChestView {
  int nv = 0, nu = 0;
  // within V
  std::vector<Bits> out1, in1, adj2, adj3;
  // V side of the bipartite layers: nbr in U
  std::vector<Bits> v4, v5, v6;
  // U side: nbr in V
  std::vector<Bits> u4, u5, u6;

  explicit ChestView(const Chest& c);
  long long deg_out1(int v) const { return out1[v].count(); }
  long long deg_in1(int v) const { return in1[v].count(); }
};

struct Diamond {
  int v1 = -1, v2 = -1, v3 = -1, u = -1;
  bool operator==(const Diamond& o) const {
    return v1 == o.v1 && v2 == o.v2 && v3 == o.v3 && u == o.u;
  }
  bool operator<(const Diamond& o) const {
    if (v1 != o.v1) return v1 < o.v1;
    if (v2 != o.v2) return v2 < o.v2;
    if (v3 != o.v3) return v3 < o.v3;
    return u < o.u;
  }
};

struct Decomposition {
  std::vector<Diamond> diamonds;
  Json to_json() const;
  static Decomposition from_json(const Json& j);
};

}  // namespace gp
