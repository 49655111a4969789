#pragma once
#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/graph.hpp"

namespace gp {

enum class ClassTag { K, J0, J1, J2, Other };

std::string class_tag_name(ClassTag t);
ClassTag class_tag_parse(const std::string& s);

struct GuestGraph {
  Graph graph;
  std::vector<int> order;  // degeneracy order: each vertex has <= degeneracy earlier neighbours
  int degeneracy = 0;
  std::vector<int> odd_vertices;
  std::vector<std::vector<int>> bare_paths;  // 12-vertex sequences
  ClassTag class_tag = ClassTag::Other;

  void refresh_order();  // recompute order/degeneracy from graph
};

struct GuestFamily {
  std::vector<GuestGraph> guests;
  std::vector<int> K, J0, J1, J2;  // guest indices
  Config params;

  std::vector<int> J() const;  // J0 ∪ J1 ∪ J2, sorted
};

struct Violation {
  std::string condition;
  std::string witness;
};

struct ClassReport {
  bool pass = true;
  std::vector<Violation> violations;
  void fail(const std::string& cond, const std::string& wit) {
    pass = false;
    violations.push_back({cond, wit});
  }
};

// order with each vertex having at most D earlier neighbours; D minimal,
// computed by repeated lowest-degree removal (ties to the smallest id)
std::pair<std::vector<int>, int> degeneracy_order(const Graph& g);

// vertex-disjoint bare paths of the given length from a tree: delete edges at
// non-degree-2 vertices, keep components of size >= 50, slice consecutive
// windows; throws NotATree
std::vector<std::vector<int>> find_bare_paths(const GuestGraph& t, int length, int count);

// packing-class conditions (a)-(e); m_budget < 0 means use C(n,2)
ClassReport classify_family(const GuestFamily& f, long long m_budget = -1);

}  // namespace gp
