#pragma once
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/jsonutil.hpp"
#include "core/rational.hpp"
#include "core/rng.hpp"
#include "pathpack/forest.hpp"

namespace gp {

// rejection attempts of the walk sampler before the exhaustive fallback, and
// whole-run attempts of the ensemble driver
inline constexpr int kPathRetries = 20;

// Uniform sample from the set of v1-vk host paths of pattern.size() vertices
// whose i-th vertex lies on the prescribed side (entry -1 admits both sides)
// and whose interior avoids `used`.  Returns nothing iff that set is empty.
// Uniformity comes from sampling walks in proportion to exact counts and
// rejecting the non-simple ones; after `retries` rejections an exhaustive
// enumeration with reservoir choice finishes the job.
std::optional<std::vector<int>> sample_consistent_path(const Graph& h, const Bits& used, int v1,
                                                       int vk, const std::vector<int>& pattern,
                                                       const SidePartition& sides, Rng& rng,
                                                       int retries = kPathRetries);

struct PathEmbedResult {
  // host vertex sequence per component, index-aligned with the forest
  std::vector<std::vector<int>> host_paths;
  int failed_at = -1;  // component whose candidate set was empty
  bool ok() const { return failed_at < 0; }
};

// Embeds the components in a uniform random order, each through
// sample_consistent_path against the vertices used so far.  On success every
// interior vertex is fresh (outside `used` and earlier components) and on its
// prescribed side.
PathEmbedResult random_path_embedding(const AnchoredPathForest& f, const Graph& h, Rng& rng,
                                      int retries = kPathRetries);

// densities within and between the two sides of a host
struct SideDensities {
  Rat mm, mp, pp;
};

SideDensities side_densities(const Graph& h, const SidePartition& sides);

// Densities an ensemble leaves behind; every forest edge consumes one host
// edge of its own side class, so the forecast is exact on success.
SideDensities leftover_density_prediction(const Graph& h0, const SidePartition& sides,
                                          const std::vector<AnchoredPathForest>& forests);

struct PathPackResult {
  bool ok = false;
  int attempts = 0;
  int failed_forest = -1;  // forest stuck on the final attempt, with the
  int failed_component = -1;  // component inside it
  std::vector<std::vector<std::vector<int>>> host_paths;  // [forest][component][slot]
  Graph leftover;
  SideDensities actual;     // measured on the leftover
  SideDensities predicted;  // closed-form forecast from the inputs
};

// Random permutation of the forests, then sequential random_path_embedding
// with the used edges removed between forests, which makes the embeddings
// edge-disjoint by construction.  A stuck run is retried wholesale with a
// fresh permutation.
PathPackResult path_packing(const std::vector<AnchoredPathForest>& forests, const Graph& h0,
                            Rng& rng, int retries = kPathRetries);

// Hit counters across trials for comparing empirical edge and vertex use
// frequencies with their predicted values.  Merges commute, so trials may be
// collected in parallel and combined afterwards.
struct PathStats {
  int n = 0;
  long long trials = 0;
  std::vector<long long> vertex_uses;                   // image covers v
  std::map<std::pair<int, int>, long long> edge_uses;   // canonical u < v

  explicit PathStats(int n_ = 0) : n(n_), vertex_uses(n_, 0) {}

  void add_trial(const std::vector<std::vector<int>>& host_paths);
  void add_pack_trial(const std::vector<std::vector<std::vector<int>>>& host_paths);
  void merge(const PathStats& other);
  Json to_json() const;
};

}  // namespace gp
