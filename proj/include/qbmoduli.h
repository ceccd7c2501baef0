/*
 * C API for the quiver-bundle moduli toolkit.
 *
 * All computations are exact (rational arithmetic); reports are returned as
 * JSON strings. Strings handed out by the library must be released with
 * qb_free_string; problems with qb_problem_free.
 *
 * Return codes: 0 success, 1 verification failure, 2 input error.
 */
#ifndef QBMODULI_H
#define QBMODULI_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define QB_OK 0
#define QB_VERIFY_FAIL 1
#define QB_INPUT_ERROR 2

typedef struct qb_problem qb_problem;

const char* qb_version(void);

void qb_free_string(char* s);

/* Parse a problem document (JSON text). On failure *errmsg is set. */
int qb_problem_parse(const char* json_text, qb_problem** out, char** errmsg);
int qb_problem_read_file(const char* path, qb_problem** out, char** errmsg);
void qb_problem_free(qb_problem* p);

/* Each report call fills *json_out with a JSON document on success. */
int qb_report_euler(const qb_problem* p, char** json_out, char** errmsg);
int qb_report_dim(const qb_problem* p, char** json_out, char** errmsg);
int qb_report_smooth(const qb_problem* p, char** json_out, char** errmsg);
int qb_report_walls(const qb_problem* p, long long window_lo, long long window_hi,
                    char** json_out, char** errmsg);
int qb_report_stability(const qb_problem* p, char** json_out, char** errmsg);

/* Runs the verification battery on the problem's bundle (genus 0 only).
 * Returns QB_VERIFY_FAIL when a check fails; the report is still written. */
int qb_report_oracle_verify(const qb_problem* p, char** json_out, char** errmsg);

/* Seeded random verification batch. max_* <= 0 selects the defaults (3, 3, 4). */
int qb_report_oracle_random(uint64_t seed, int count, int max_vertices, int max_rank,
                            int max_abs_degree, char** json_out, char** errmsg);

/* Renders the human-readable view of a report produced above. */
int qb_render_text(const char* command, const char* report_json, char** text_out,
                   char** errmsg);

#ifdef __cplusplus
}
#endif

#endif
