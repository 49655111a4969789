#include <cstdio>
#include "graphpack.h"

int main() {
  std::printf("%s\n", gp_version());
  return 0;
}
