#pragma once
#include <string>

#include "core/jsonutil.hpp"
#include "core/rational.hpp"

namespace gp {

struct AuditReport {
  std::string definition;
  Rat gamma{0};
  int L = 0;
  bool pass = true;
  Rat worst_ratio{0};         // max deviation factor over checked tuples
  bool ratio_infinite = false;  // expected 0 but actual nonzero somewhere
  Json witness = Json::object();
  long long checked = 0;
  std::string mode = "exhaustive";
  Json items = Json::object();  // per-condition results for compound audits

  // fold one tuple's deviation into the report
  void absorb(const Rat& ratio, const Json& wit) {
    ++checked;
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      witness = wit;
    }
  }
  void absorb_infinite(const Json& wit) {
    ++checked;
    if (!ratio_infinite) {
      ratio_infinite = true;
      witness = wit;
    }
  }
  void finalize() { pass = !ratio_infinite && worst_ratio <= gamma; }

  Json to_json() const {
    Json j;
    j["definition"] = definition;
    j["gamma"] = rat_to_json(gamma);
    j["L"] = L;
    j["pass"] = pass;
    j["worst_ratio"] = ratio_infinite ? Json("inf") : rat_to_json(worst_ratio);
    j["witness"] = witness;
    j["checked"] = checked;
    j["mode"] = mode;
    if (!items.empty()) j["items"] = items;
    return j;
  }
};

// deviation factor of actual vs expected; infinite when expected==0 < actual
inline bool tuple_ratio(long long actual, const Rat& expected, Rat& out) {
  if (expected == 0) {
    out = 0;
    return actual == 0;
  }
  out = rat_abs(Rat(actual) - expected) / expected;
  return true;
}

}  // namespace gp
