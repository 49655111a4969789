#include "stages/slices.hpp"

#include <string>

#include "core/error.hpp"

namespace gp {

std::vector<int> path_slice(const std::vector<int>& p, int h, Slice which) {
  const int len = static_cast<int>(p.size()) - 1;  // edge count
  if (len < 0) throw OutOfRange("empty vertex sequence");
  if (h < 0 || h > len)
    throw OutOfRange("slice of " + std::to_string(h) + " edges from a path with " +
                     std::to_string(len));
  switch (which) {
    case Slice::Left:
      return std::vector<int>(p.begin(), p.begin() + h + 1);
    case Slice::Right:
      return std::vector<int>(p.end() - (h + 1), p.end());
    case Slice::Middle: {
      if (h == len) throw OutOfRange("middle slice must be proper (h < path length)");
      if ((len - h) % 2 != 0)
        throw ParityMismatch("middle slice of " + std::to_string(h) + " edges from length " +
                             std::to_string(len));
      int strip = (len - h - 2) / 2 + 1;  // vertices dropped from each end
      return std::vector<int>(p.begin() + strip, p.end() - strip);
    }
  }
  throw OutOfRange("unknown slice kind");
}

}  // namespace gp
