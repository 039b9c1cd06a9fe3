/* C interface to the verification toolkit.
 *
 * All functions that produce output write a malloc'd NUL-terminated string
 * (JSON, or line-delimited JSON for reports) to *out; release it with
 * af3_string_free.  Return codes: 0 success (and, for check runners, all
 * checks passed), 1 at least one check claim failed, 2 error (see
 * af3_last_error).  On nonzero *out may still carry partial output or be
 * set to NULL.
 */

#ifndef AFFRANK3_H
#define AFFRANK3_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct af3_ctx af3_ctx;

/* fixtures_dir may be NULL: falls back to $AFFRANK3_FIXTURES, then "fixtures". */
af3_ctx* af3_ctx_new(const char* fixtures_dir);
void af3_ctx_free(af3_ctx* ctx);

/* Message for the most recent failing call on this context. */
const char* af3_last_error(const af3_ctx* ctx);

void af3_string_free(char* s);

/* JSON array of registered check ids, in canonical order. */
int af3_check_ids(af3_ctx* ctx, char** out);

/* One check; *out is the JSON record (id, claim, expected, computed, pass,
 * millis). */
int af3_run_check(af3_ctx* ctx, const char* id, char** out);

/* Every check on `threads` workers; *out is a line-delimited JSON report,
 * one record per check in canonical order plus a trailing summary record.
 * timeout_secs <= 0 disables the deadline. */
int af3_run_all(af3_ctx* ctx, int threads, int timeout_secs, char** out);

/* Orbit census of the group in a fixture file (path). */
int af3_orbits(af3_ctx* ctx, const char* fixture_path, char** out);

/* Cocycle-space dimensions of a named module of a fixture file. */
int af3_h1(af3_ctx* ctx, const char* fixture_path, const char* module_label, char** out);

/* Complement classes of a scene "name:Wlabel:Ulabel"; the name is resolved
 * in the fixtures directory and "triv" denotes the trivial 1-dim module. */
int af3_complements(af3_ctx* ctx, const char* scene_id, char** out);

/* Coset enumeration certifying the presentation of a named fixture. */
int af3_tc(af3_ctx* ctx, const char* fixture_name, char** out);

/* Irreducibility test for a named module of a fixture file. */
int af3_meataxe(af3_ctx* ctx, const char* fixture_path, const char* module_label, char** out);

#ifdef __cplusplus
}
#endif

#endif /* AFFRANK3_H */
