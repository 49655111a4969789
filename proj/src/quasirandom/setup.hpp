#pragma once
#include <utility>
#include <vector>

#include "core/bits.hpp"
#include "core/graph.hpp"
#include "core/packing.hpp"

namespace gp {

// per-guest slice of the data a setup audit needs: where the remaining paths
// are anchored, which host vertices the partial embedding occupies, and (for
// guests that still have to reach terminal pairs) the usable pair indices
struct SetupGuest {
  std::vector<std::pair<int, int>> anchor_pairs;  // (head image, tail image), one per path
  Bits used;
  std::vector<int> index_set;
};

struct SetupBundle {
  const Graph* host = nullptr;  // leftover edges, on the full vertex set
  TerminalPairing pairing;
  std::vector<int> j0, j1, j2;  // guest ids by class, disjoint
  std::vector<SetupGuest> guests;
};

}  // namespace gp
