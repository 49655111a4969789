#pragma once
#include <array>
#include <cstdint>
#include <vector>

namespace gp {

// requirement triple: edges to place inside V-, crossing, inside V+
struct OccRequirement {
  long long n1 = 0, n2 = 0, n3 = 0;
  long long total() const { return n1 + n2 + n3; }
};

// abstract slot set with parity marks; odd[k] != 0 marks slot k odd
// throws NotBalanced("a"|"b"|"c") naming the violated balance condition:
// (a) N1+N2+N3 = 7|X|; (b) 3|X| <= N2 <= 4|X| and N1,N3 >= |X|;
// (c) N2 and the odd-slot count have equal parity
void check_moderately_balanced(const std::vector<char>& odd, const OccRequirement& req);

// per-slot triple (edges inside V-, crossing, inside V+) summing to 7, with
// crossing count odd exactly on odd slots and column sums equal to req;
// deterministic in the slot order: init (1,2,1)/(1,3,1), raise the earliest
// minimal crossing entry by 2 until column two is met, then fill the earliest
// open row on the earliest open column; throws PreconditionViolated
std::vector<std::array<long long, 3>> occupancy_assign(const std::vector<char>& odd,
                                                       const OccRequirement& req);

enum class AnchorSides { MinusMinus, MinusPlus, PlusPlus };
enum class OccVariant { Down, Up };

// prescribed side labels (0 = minus, 1 = plus) for the 8 vertices of a path
// slice whose per-side edge counts must come out as aleph; crossing-anchored
// slices are assumed oriented with x1 on the minus side; throws UnknownRow
// when aleph is not a row of the table for (sides, variant)
std::array<int, 8> xi_from_tables(AnchorSides sides, const std::array<long long, 3>& aleph,
                                  OccVariant variant);

// all table rows for one (sides, variant) pair, for exhaustive sweeps
std::vector<std::array<long long, 3>> xi_table_rows(AnchorSides sides, OccVariant variant);

}  // namespace gp
