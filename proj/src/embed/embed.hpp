#pragma once
#include <vector>

#include "core/family.hpp"
#include "core/graph.hpp"
#include "core/packing.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"

namespace gp {

// common host neighbourhood of the images of t's earlier guest neighbours;
// the whole host vertex set when t has none; throws UnembeddedLeftNeighbour
// when an earlier neighbour has no image yet
Bits candidate_set(const GuestGraph& g, const Graph& h, const PartialEmbedding& psi, int t);

struct EmbedTraceEntry {
  int t;        // guest vertex placed
  int choices;  // size of the choice set it was drawn from
  int chosen;   // host vertex picked
};

// failure is a value: failed_at is the guest vertex whose choice set was empty
struct EmbedResult {
  PartialEmbedding psi;
  int failed_at = -1;
  bool ok() const { return failed_at < 0; }
};

// embed the first t_star vertices of the degeneracy order, each image uniform
// over candidate-set-minus-image; deterministic for fixed (inputs, rng state)
EmbedResult random_embedding(const GuestGraph& g, const Graph& h, int t_star, Rng& rng,
                             std::vector<EmbedTraceEntry>* trace = nullptr);

struct PackProcessResult {
  bool ok = false;
  int failed_guest = -1;  // guest index that exhausted its retries
  int attempts = 0;       // attempts spent on that guest
  PackingState state;
  std::vector<Graph> leftovers;  // running host after each guest
  std::vector<Rat> densities;    // e(leftover) / C(n,2) after each guest
};

// sequentially embed every guest into the running leftover host, removing the
// edges each successful embedding uses; each guest gets up to `retries` draws
// of fresh randomness before the process aborts; t_star < 0 embeds guests
// fully, otherwise each guest stops at min(t_star, v(guest)) vertices
PackProcessResult packing_process(const GuestFamily& f, const Graph& h0, Rng& rng,
                                  int retries = 20, int t_star = -1);

}  // namespace gp
