#pragma once
#include <optional>
#include <string>
#include <vector>

#include "core/family.hpp"
#include "core/graph.hpp"

namespace gp {

struct PartialEmbedding {
  std::vector<int> map;  // guest vertex -> host vertex, -1 unmapped
  Bits image;            // host vertices used by this guest
  int mapped_count = 0;

  PartialEmbedding() = default;
  PartialEmbedding(int guest_n, int host_n) : map(static_cast<size_t>(guest_n), -1), image(host_n) {}

  bool mapped(int x) const { return map[static_cast<size_t>(x)] >= 0; }
  int at(int x) const { return map[static_cast<size_t>(x)]; }
  void set(int x, int v) {
    map[static_cast<size_t>(x)] = v;
    image.set(v);
    ++mapped_count;
  }
  void unset(int x) {
    image.reset(map[static_cast<size_t>(x)]);
    map[static_cast<size_t>(x)] = -1;
    --mapped_count;
  }
};

// host vertex pairing into terminals: pair i is (minus_of(i), plus_of(i))
struct TerminalPairing {
  std::vector<std::pair<int, int>> pairs;
  int box_dot = -1;  // the spare vertex for odd host order

  int npairs() const { return static_cast<int>(pairs.size()); }
  // 0 for the minus side, 1 for the plus side, -1 otherwise
  int side_of(int v, int* index = nullptr) const {
    for (size_t i = 0; i < pairs.size(); ++i) {
      if (pairs[i].first == v) {
        if (index) *index = static_cast<int>(i);
        return 0;
      }
      if (pairs[i].second == v) {
        if (index) *index = static_cast<int>(i);
        return 1;
      }
    }
    return -1;
  }
};

// per-vertex parity bookkeeping plus anchored-pair counts by side class
struct Ledger {
  std::vector<long long> odd_out, path_term, parity, t_count;
  long long j_mm = 0, j_mp = 0, j_pp = 0;
};

struct PackingState {
  Graph host;
  Graph residual;                 // host minus owned edges
  std::vector<int> owner;         // flattened host-edge owner matrix, -1 free
  std::vector<PartialEmbedding> embeddings;
  std::optional<TerminalPairing> pairing;
  std::optional<Ledger> ledgers;

  PackingState() = default;
  PackingState(const Graph& h, const GuestFamily& f);

  int owner_of(int u, int v) const { return owner[static_cast<size_t>(u) * host.n + v]; }
  bool edge_free(int u, int v) const { return residual.has_edge(u, v); }
  void own_edge(int u, int v, int s);
  void release_edge(int u, int v);

  // place guest vertex x of guest s on host vertex v, owning edges to embedded
  // neighbours; caller checked feasibility
  void place(const GuestGraph& g, int s, int x, int v);
  void unplace(const GuestGraph& g, int s, int x);
};

struct VerifyReport {
  bool pass = true;
  std::vector<Violation> violations;
  long long covered_edges = 0;
  long long host_edges = 0;
  void fail(const std::string& cond, const std::string& wit) {
    pass = false;
    violations.push_back({cond, wit});
  }
};

VerifyReport verify_packing(const PackingState& s, const GuestFamily& f, bool perfect);

Graph leftover_graph(const PackingState& s);

enum class BacktrackStatus { Found, Exhausted, Infeasible };

struct BacktrackResult {
  BacktrackStatus status = BacktrackStatus::Infeasible;
  PackingState state;
  unsigned long long nodes = 0;
  int max_depth = 0;
};

// exact DFS packer: guests largest-first, vertices in degeneracy order,
// candidate hosts by ascending residual degree
BacktrackResult backtrack_pack(const GuestFamily& f, const Graph& h, unsigned long long budget);

}  // namespace gp
