#pragma once
#include <vector>

namespace gp {

enum class Slice { Left, Right, Middle };

// subpath extraction by edge count h: Left keeps the first h+1 vertices,
// Right the last h+1, Middle strips (len-h-2)/2 + 1 vertices from each end;
// Middle needs h < len and h ≡ len (mod 2); throws OutOfRange, ParityMismatch
std::vector<int> path_slice(const std::vector<int>& p, int h, Slice which);

}  // namespace gp
