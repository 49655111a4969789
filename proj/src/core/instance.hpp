#pragma once
#include <string>

#include "core/config.hpp"
#include "core/family.hpp"
#include "core/jsonutil.hpp"
#include "core/packing.hpp"

namespace gp {

struct HostSpec {
  std::string type = "complete";  // "complete" | "gnp"
  Rat p{1, 2};
  uint64_t seed = 0;
};

struct Instance {
  int n = 0;
  HostSpec host;
  GuestFamily family;
  Config config;
};

Json config_to_json(const Config& c);
Config config_from_json(const Json& j);

Json instance_to_json(const Instance& ins);
Instance instance_from_json(const Json& j);

Graph build_host(const HostSpec& spec, int n);

Json packing_to_json(const PackingState& st);
void packing_apply_json(const Json& j, const GuestFamily& f, PackingState& st);

// canonical content hash for reports
std::string instance_hash(const Instance& ins);

}  // namespace gp
