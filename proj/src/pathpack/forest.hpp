#pragma once
#include <string>
#include <vector>

#include "core/bits.hpp"

namespace gp {

// two-colouring of the host vertex set
struct SidePartition {
  Bits minus, plus;
  // 0 = minus, 1 = plus, -1 = in neither
  int side_of(int v) const {
    if (minus.test(v)) return 0;
    if (plus.test(v)) return 1;
    return -1;
  }
  bool total(int n) const {
    return minus.n == n && plus.n == n && minus.and_count(plus) == 0 &&
           minus.count() + plus.count() == n;
  }
};

// one path to embed: xi[i] is the prescribed side of the i-th vertex,
// both ends are anchored at fixed host vertices
struct PathSpec {
  std::vector<int> xi;
  int head_host = -1;
  int tail_host = -1;
  int edges() const { return (int)xi.size() - 1; }
};

// a family of vertex-disjoint anchored paths plus the host vertices that are
// already unavailable (images of anchors always included)
struct AnchoredPathForest {
  std::vector<PathSpec> paths;
  Bits used;
  SidePartition sides;

  // empty string when well-formed, else a description of the first defect
  std::string validate() const {
    if (paths.empty()) return "path-forest has no components";
    Bits anchors(used.n);
    for (size_t p = 0; p < paths.size(); ++p) {
      const PathSpec& ps = paths[p];
      if (ps.xi.size() < 2) return "path too short";
      if (ps.head_host < 0 || ps.head_host >= used.n) return "head anchor out of range";
      if (ps.tail_host < 0 || ps.tail_host >= used.n) return "tail anchor out of range";
      if (!used.test(ps.head_host) || !used.test(ps.tail_host))
        return "anchor image not marked used";
      if (anchors.test(ps.head_host)) return "anchor image repeated";
      anchors.set(ps.head_host);
      if (anchors.test(ps.tail_host)) return "anchor image repeated";
      anchors.set(ps.tail_host);
      for (int side : ps.xi)
        if (side != 0 && side != 1) return "xi not a two-colouring";
      if (sides.side_of(ps.head_host) != ps.xi.front()) return "head side mismatch";
      if (sides.side_of(ps.tail_host) != ps.xi.back()) return "tail side mismatch";
    }
    return "";
  }
};

}  // namespace gp
