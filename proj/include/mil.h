/* C interface to the invariant-ring / local-cohomology toolkit.
 *
 * All computations run exactly over small finite fields. Problems are
 * described by JSON documents (see README.md for the schema); results come
 * back as heap-allocated JSON strings that must be released with
 * mil_string_free. On any failure the return code is nonzero and
 * mil_last_error() carries a message for the calling thread.
 */
#ifndef MIL_H
#define MIL_H

#ifdef __cplusplus
extern "C" {
#endif

#define MIL_API_VERSION 1

typedef struct mil_problem mil_problem;

typedef enum mil_status {
  MIL_OK = 0,
  MIL_ERROR_INTERNAL = 1,
  MIL_ERROR_PARSE = 2,    /* malformed input or failed validation */
  MIL_ERROR_REFUSED = 3,  /* computation refused (transvections, missing CM assertion) */
  MIL_ERROR_MISMATCH = 4, /* reproduce/verify checks failed */
  MIL_ERROR_BUDGET = 5    /* resource cap hit (pairs, powers, order, search floor) */
} mil_status;

const char* mil_version(void);
int mil_api_version(void);

/* Message describing the most recent failure on this thread; never NULL. */
const char* mil_last_error(void);

void mil_string_free(char* s);

mil_status mil_problem_from_file(const char* path, mil_problem** out);
mil_status mil_problem_from_json(const char* text, mil_problem** out);
void mil_problem_free(mil_problem* p);

/* Overrides the Groebner pair cap for subsequent commands on this problem. */
mil_status mil_problem_set_pair_budget(mil_problem* p, long budget);

/* Group classification: order, SL membership, pseudoreflections,
 * transvections, modularity, cyclicity, per-element table. */
mil_status mil_classify(mil_problem* p, char** json_out);

/* Invariant Hilbert function and a degree-ascending generating set up to
 * max_degree (pass 0 to use the problem's window or the default). */
mil_status mil_invariants(mil_problem* p, int max_degree, char** json_out);

/* Per-degree strand table (dim V, rank H, rank fixed) on [k_from, k_to],
 * with the a-invariant when computable. Pass use_window = 1 to take the
 * window from the problem file. */
mil_status mil_local_cohomology(mil_problem* p, int k_from, int k_to, int use_window,
                                char** json_out);

/* a-invariant of the invariant ring; search_floor may be NULL for the
 * default. Fails with MIL_ERROR_REFUSED when no route applies. */
mil_status mil_a_invariant(mil_problem* p, const int* search_floor, char** json_out);

/* Property cross-checks applicable to the problem. Returns MIL_ERROR_MISMATCH
 * when a check fails; json_out is still filled in that case. */
mil_status mil_verify(mil_problem* p, char** json_out);

/* Runs a bundled example against its embedded expected values. Returns
 * MIL_ERROR_MISMATCH on any mismatch, with json_out filled. */
mil_status mil_reproduce(const char* example_id, char** json_out);

/* Comma-separated list of bundled example ids; static storage. */
const char* mil_bundled_ids(void);

/* JSON text of a bundled problem description. */
mil_status mil_bundled_problem_json(const char* example_id, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* MIL_H */
