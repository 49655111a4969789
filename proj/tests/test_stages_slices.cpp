#include <doctest.h>

#include <numeric>
#include <vector>

#include "core/error.hpp"
#include "stages/slices.hpp"

using namespace gp;

namespace {

std::vector<int> iota_path(int nverts) {
  std::vector<int> p(static_cast<size_t>(nverts));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("left slice keeps the first h+1 vertices") {
  auto p = iota_path(12);
  CHECK(path_slice(p, 0, Slice::Left) == std::vector<int>{0});
  CHECK(path_slice(p, 4, Slice::Left) == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(path_slice(p, 11, Slice::Left) == p);
}

TEST_CASE("right slice keeps the last h+1 vertices") {
  auto p = iota_path(12);
  CHECK(path_slice(p, 0, Slice::Right) == std::vector<int>{11});
  CHECK(path_slice(p, 4, Slice::Right) == std::vector<int>{7, 8, 9, 10, 11});
  CHECK(path_slice(p, 11, Slice::Right) == p);
}

TEST_CASE("middle slice of an 11-edge path") {
  auto p = iota_path(12);
  CHECK(path_slice(p, 7, Slice::Middle) == std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(path_slice(p, 3, Slice::Middle) == std::vector<int>{4, 5, 6, 7});
  CHECK(path_slice(p, 1, Slice::Middle) == std::vector<int>{5, 6});
  CHECK(path_slice(p, 9, Slice::Middle) ==
        std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
}

TEST_CASE("middle slice of a 7-edge slice drills to its interior") {
  std::vector<int> s{2, 3, 4, 5, 6, 7, 8, 9};
  CHECK(path_slice(s, 5, Slice::Middle) == std::vector<int>{3, 4, 5, 6, 7, 8});
  CHECK(path_slice(s, 3, Slice::Middle) == std::vector<int>{4, 5, 6, 7});
}

TEST_CASE("middle slice parity and range errors") {
  auto p = iota_path(12);
  CHECK_THROWS_AS(path_slice(p, 4, Slice::Middle), ParityMismatch);
  CHECK_THROWS_AS(path_slice(p, 11, Slice::Middle), OutOfRange);
  CHECK_THROWS_AS(path_slice(p, 12, Slice::Left), OutOfRange);
  CHECK_THROWS_AS(path_slice(p, -1, Slice::Right), OutOfRange);
}

TEST_CASE("even-length paths admit a single-vertex centre") {
  auto p = iota_path(5);
  CHECK(path_slice(p, 0, Slice::Middle) == std::vector<int>{2});
  CHECK(path_slice(p, 2, Slice::Middle) == std::vector<int>{1, 2, 3});
}

TEST_CASE("slices compose: middle of middle") {
  auto p = iota_path(12);
  auto m7 = path_slice(p, 7, Slice::Middle);
  auto m3 = path_slice(m7, 3, Slice::Middle);
  CHECK(m3 == path_slice(p, 3, Slice::Middle));
}
