#include "core/matching.hpp"

#include <limits>
#include <queue>

namespace gp {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp: BFS builds the layered graph over free left vertices, DFS
// augments along shortest alternating paths until none remain.
struct Hk {
  const std::vector<std::vector<int>>& adj;
  std::vector<int>&ml, &mr;
  std::vector<int> dist;

  bool bfs() {
    std::queue<int> q;
    dist.assign(ml.size(), kInf);
    for (size_t l = 0; l < ml.size(); ++l)
      if (ml[l] == -1) {
        dist[l] = 0;
        q.push(static_cast<int>(l));
      }
    bool found = false;
    while (!q.empty()) {
      int l = q.front();
      q.pop();
      for (int r : adj[static_cast<size_t>(l)]) {
        int l2 = mr[static_cast<size_t>(r)];
        if (l2 == -1)
          found = true;
        else if (dist[static_cast<size_t>(l2)] == kInf) {
          dist[static_cast<size_t>(l2)] = dist[static_cast<size_t>(l)] + 1;
          q.push(l2);
        }
      }
    }
    return found;
  }

  bool dfs(int l) {
    for (int r : adj[static_cast<size_t>(l)]) {
      int l2 = mr[static_cast<size_t>(r)];
      if (l2 == -1 || (dist[static_cast<size_t>(l2)] == dist[static_cast<size_t>(l)] + 1 &&
                       dfs(l2))) {
        ml[static_cast<size_t>(l)] = r;
        mr[static_cast<size_t>(r)] = l;
        return true;
      }
    }
    dist[static_cast<size_t>(l)] = kInf;
    return false;
  }
};

}  // namespace

MatchingResult max_bipartite_matching(const std::vector<std::vector<int>>& adj, int nright) {
  MatchingResult res;
  res.match_left.assign(adj.size(), -1);
  res.match_right.assign(static_cast<size_t>(nright), -1);
  Hk hk{adj, res.match_left, res.match_right, {}};
  while (hk.bfs()) {
    for (size_t l = 0; l < adj.size(); ++l)
      if (res.match_left[l] == -1 && hk.dfs(static_cast<int>(l))) ++res.size;
  }
  return res;
}

std::vector<int> hall_violator(const std::vector<std::vector<int>>& adj, int nright,
                               const MatchingResult& m) {
  int start = -1;
  for (size_t l = 0; l < adj.size(); ++l)
    if (m.match_left[l] == -1) {
      start = static_cast<int>(l);
      break;
    }
  if (start == -1) return {};
  // alternating reachability from an exposed left vertex: any edge leftward
  // out, matching edge back; the reached left set beats its neighbourhood
  // by one since the matching is maximum
  std::vector<char> seen_l(adj.size(), 0), seen_r(static_cast<size_t>(nright), 0);
  std::queue<int> q;
  q.push(start);
  seen_l[static_cast<size_t>(start)] = 1;
  while (!q.empty()) {
    int l = q.front();
    q.pop();
    for (int r : adj[static_cast<size_t>(l)]) {
      if (seen_r[static_cast<size_t>(r)]) continue;
      seen_r[static_cast<size_t>(r)] = 1;
      int l2 = m.match_right[static_cast<size_t>(r)];
      if (l2 != -1 && !seen_l[static_cast<size_t>(l2)]) {
        seen_l[static_cast<size_t>(l2)] = 1;
        q.push(l2);
      }
    }
  }
  std::vector<int> s;
  for (size_t l = 0; l < adj.size(); ++l)
    if (seen_l[l]) s.push_back(static_cast<int>(l));
  return s;
}

}  // namespace gp
