#ifndef GRAPHPACK_H
#define GRAPHPACK_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* opaque handle: a loaded instance plus mutable pipeline state */
typedef struct gp_engine gp_engine;

/* error codes */
#define GP_OK 0
#define GP_EINVAL 1  /* bad arguments */
#define GP_EPARSE 2  /* malformed JSON input */
#define GP_EFAIL 3   /* stage, audit, or verification failure; details in output */
#define GP_EBUDGET 4 /* search budget exhausted */

/* Create an engine from an instance JSON document.  Returns GP_OK and a handle,
   or an error code with *out set to NULL. */
int gp_engine_create(const char* instance_json, gp_engine** out);
void gp_engine_destroy(gp_engine* e);

/* Last error message recorded on this engine; owned by the engine, valid until
   the next call on it.  May be queried after a failed gp_engine_create via
   engine == NULL? No: create failures report through the return code only. */
const char* gp_engine_error(const gp_engine* e);

/* Run the staged pipeline.  options_json may be "{}" or select
   {"stop_after":"a".."g", "resume_from":"<path>", "out":"<dir>", "jobs":k,
    "seed":..., "retries":..., "gamma":{"A":"1/100",...}, "level":{"C":2,...}}.
   On GP_OK (and on GP_EFAIL when a stage fails) *report_json carries the run
   report; caller frees it with gp_free_string. */
int gp_run_experiment(gp_engine* e, const char* options_json, char** report_json);

/* Audits.  which is one of "quasirandom", "diet", "block_diet", "index",
   "setup", "chest", "anchor", "pair"; args_json carries definition-specific
   arguments (gamma, L, sets, ...).  Returns GP_OK with the audit report, or
   GP_EFAIL when the audit itself fails (report still written). */
int gp_audit(gp_engine* e, const char* which, const char* args_json, char** report_json);

/* Exact small-instance oracle over the engine's instance. */
int gp_backtrack_pack(gp_engine* e, uint64_t budget, char** packing_json);

/* Verify a packing JSON against the engine's instance. */
int gp_verify_packing(gp_engine* e, const char* packing_json, int perfect, char** report_json);

/* Chest utilities on explicit JSON documents; no engine involved. */
int gp_chest_solve(const char* chest_json, char** decomposition_json);
int gp_chest_verify(const char* chest_json, const char* decomposition_json, char** report_json);

/* Generators: kind in {"tree", "host", "pipeline"}. */
int gp_generate(const char* kind, const char* params_json, char** out_json);

void gp_free_string(char* s);
const char* gp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* GRAPHPACK_H */
