#include "graphpack.h"

#include <cstring>
#include <string>

#include "core/error.hpp"
#include "core/instance.hpp"

struct gp_engine {
  gp::Instance instance;
  std::string last_error;
};

static char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

extern "C" {

int gp_engine_create(const char* instance_json, gp_engine** out) {
  if (!instance_json || !out) return GP_EINVAL;
  *out = nullptr;
  try {
    auto j = gp::Json::parse(instance_json);
    auto e = new gp_engine();
    e->instance = gp::instance_from_json(j);
    *out = e;
    return GP_OK;
  } catch (const std::exception&) {
    return GP_EPARSE;
  }
}

void gp_engine_destroy(gp_engine* e) { delete e; }

const char* gp_engine_error(const gp_engine* e) { return e ? e->last_error.c_str() : ""; }

void gp_free_string(char* s) { delete[] s; }

const char* gp_version(void) { return "graphpack 1.0.0"; }

/* remaining entry points are wired after the pipeline lands */
int gp_run_experiment(gp_engine* e, const char*, char** r) {
  if (e) e->last_error = "not yet wired";
  if (r) *r = dup_string("{}");
  return GP_EINVAL;
}
int gp_audit(gp_engine* e, const char*, const char*, char** r) {
  if (e) e->last_error = "not yet wired";
  if (r) *r = dup_string("{}");
  return GP_EINVAL;
}
int gp_backtrack_pack(gp_engine* e, uint64_t, char** r) {
  if (e) e->last_error = "not yet wired";
  if (r) *r = dup_string("{}");
  return GP_EINVAL;
}
int gp_verify_packing(gp_engine* e, const char*, int, char** r) {
  if (e) e->last_error = "not yet wired";
  if (r) *r = dup_string("{}");
  return GP_EINVAL;
}
int gp_chest_solve(const char*, char** r) {
  if (r) *r = dup_string("{}");
  return GP_EINVAL;
}
int gp_chest_verify(const char*, const char*, char** r) {
  if (r) *r = dup_string("{}");
  return GP_EINVAL;
}
int gp_generate(const char*, const char*, char** r) {
  if (r) *r = dup_string("{}");
  return GP_EINVAL;
}

}  // extern "C"
