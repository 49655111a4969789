#pragma once
#include <vector>

namespace gp {

// maximum bipartite matching; adj[l] lists the right-side neighbours of l
struct MatchingResult {
  std::vector<int> match_left;   // left vertex -> right partner, -1 unmatched
  std::vector<int> match_right;  // right vertex -> left partner, -1 unmatched
  int size = 0;
  bool covers_left() const { return size == static_cast<int>(match_left.size()); }
};

MatchingResult max_bipartite_matching(const std::vector<std::vector<int>>& adj, int nright);

// a left set S with |N(S)| < |S|, empty iff the matching covers the left side
std::vector<int> hall_violator(const std::vector<std::vector<int>>& adj, int nright,
                               const MatchingResult& m);

}  // namespace gp
