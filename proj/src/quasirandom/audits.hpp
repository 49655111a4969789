#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "core/graph.hpp"
#include "core/packing.hpp"
#include "core/rational.hpp"
#include "designs/chest_types.hpp"
#include "pathpack/forest.hpp"
#include "quasirandom/audit_report.hpp"
#include "quasirandom/setup.hpp"

namespace gp {

constexpr long long kDefaultAuditBudget = 10000000;

// |N(S)| = (1 +- gamma) p^|S| n for all S with |S| <= L, p the edge density
AuditReport audit_quasirandom(const Graph& h, const Rat& gamma, int L,
                              long long budget = kDefaultAuditBudget, uint64_t seed = 0);

// |N(S) \ X| = (1 +- gamma) p^|S| (n - |X|)
AuditReport audit_diet(const Graph& h, const std::vector<int>& x, const Rat& gamma, int L,
                       long long budget = kDefaultAuditBudget, uint64_t seed = 0);

// both block displays over (S-, S+) with |S-|+|S+| <= L, densities recomputed
AuditReport audit_block_diet(const Graph& h, const Bits& vminus, const Bits& vplus, const Bits& u,
                             const Rat& gamma, int L, long long budget = kDefaultAuditBudget,
                             uint64_t seed = 0);

// indexed-pair quasirandomness: counts i whose minus vertex sees S1 avoiding
// the T1 used-sets, whose plus vertex sees S2 avoiding T2, and i in all T3
// anchor-index sets; anchors entries are (owner position in `used`, index set)
AuditReport audit_index(const Graph& h, const TerminalPairing& pairing,
                        const std::vector<Bits>& used,
                        const std::vector<std::pair<int, std::vector<int>>>& anchors, int L,
                        const Rat& gamma, const Rat& d1, const Rat& d2,
                        long long budget = kDefaultAuditBudget, uint64_t seed = 0);

// the eight setup conditions, itemized in report.items as Quasi1..Quasi8
AuditReport audit_setup(const SetupBundle& b, const Rat& gamma, int L, const Rat& d1,
                        const Rat& d2, long long budget = kDefaultAuditBudget, uint64_t seed = 0);

// anchor distribution: for each side pattern (a,b,c) and host v in V_b \ U,
// the anchors of that pattern adjacent to v number (1 +- gamma) d_ab |A_abc|
// +- gamma/2 * ceil(n^0.99); also the coarser (a,b) form with full slack
AuditReport check_anchor_distribution(const AnchoredPathForest& f, const Graph& h,
                                      const Rat& gamma);

// pair distribution: per host edge, the anchored-forest pair weights sum to
// the global edge-frequency prediction within (1 +- gamma) +- gamma/ceil(n^0.01)
AuditReport check_pair_distribution(const std::vector<AnchoredPathForest>& forests, const Graph& h,
                                    const Rat& gamma);

// six-layer chest quasirandomness, both displays, disjoint slots of total <= L
AuditReport audit_chest(const Chest& m, const Rat& gamma, int L,
                        long long budget = kDefaultAuditBudget, uint64_t seed = 0);

}  // namespace gp
