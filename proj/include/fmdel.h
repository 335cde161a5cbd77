/* fmdel - weighted F-minor deletion toolkit.
 *
 * C interface to the solver library: opaque graph handles, status codes, and
 * JSON result strings. Strings returned through char** are heap-allocated and
 * must be released with fmd_string_free.
 */
#ifndef FMDEL_H
#define FMDEL_H

#include <stddef.h>
#include <stdint.h>

#ifndef FMDEL_API
#if defined(_WIN32)
#define FMDEL_API __declspec(dllexport)
#else
#define FMDEL_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fmd_graph fmd_graph;

typedef enum fmd_status {
    FMD_OK = 0,
    FMD_ERR = 1,              /* unexpected runtime error */
    FMD_INFEASIBLE = 2,       /* no solution within the given budget, or all
                                 randomized repetitions aborted */
    FMD_ERR_PARSE = 3,        /* malformed input text */
    FMD_ERR_INVALID = 4,      /* argument violates a documented requirement */
    FMD_ERR_PRECONDITION = 5, /* algorithmic precondition not met */
    FMD_ERR_CAP = 6           /* instance exceeds a brute-force cap */
} fmd_status;

/* Message describing the last failure on this thread. Valid until the next
 * failing fmdel call on the same thread. */
FMDEL_API const char* fmd_last_error(void);

FMDEL_API void fmd_string_free(char* s);

/* format: "edgelist" or "json". */
FMDEL_API fmd_status fmd_graph_parse(const char* text, const char* format, fmd_graph** out);
FMDEL_API void fmd_graph_free(fmd_graph* g);
FMDEL_API int fmd_graph_vertex_count(const fmd_graph* g);
FMDEL_API long long fmd_graph_edge_count(const fmd_graph* g);
FMDEL_API fmd_status fmd_graph_to_json(const fmd_graph* g, char** json_out);

/* Process-wide brute-force caps: "tw_exact", "minor_pattern", "folio_host",
 * "folio_h", "exact_solver", "modulator_enum", "exhaustive". */
FMDEL_API fmd_status fmd_set_cap(const char* name, int value);
FMDEL_API fmd_status fmd_set_threads(int threads);

/* family: preset name ("k3", "k4", "outerplanar") or a JSON document
 * {"eta":..., "h":..., "patterns":[{graph json}...]}. */

/* Modulator hitting family as a JSON array [{"kind":...,"C":[...],"S":[...]}]. */
FMDEL_API fmd_status fmd_family(const fmd_graph* g, int eta, char** json_out);

/* Exhaustive family over the protrusion given by vertex ids a[0..a_len).
 * ell < 0 requests the unsized variant. */
FMDEL_API fmd_status fmd_exhaust(const fmd_graph* g, const char* family, const int* a, size_t a_len,
                       int ell, char** json_out);

/* Exact minimum-weight hitting set; k < 0 means unbounded size. Returns
 * FMD_INFEASIBLE when no hitting set with <= k vertices exists. */
FMDEL_API fmd_status fmd_exact(const fmd_graph* g, const char* family, int k, char** json_out);

/* Randomized constant-factor approximation (modulator phase + exact residual). */
FMDEL_API fmd_status fmd_approx(const fmd_graph* g, const char* family, uint64_t seed, char** json_out);

/* Randomized k-optimal search; repetitions <= 0 selects the default schedule.
 * Returns FMD_INFEASIBLE when every repetition aborted (json_out still carries
 * the failure report). */
FMDEL_API fmd_status fmd_fpt(const fmd_graph* g, const char* family, int k, uint64_t seed,
                   long long repetitions, char** json_out);

/* Verification harness. spec_json:
 * {"generator":"gnp","n_min":6,"n_max":9,"params":{"p":0.4},"weights":[1,5],
 *  "seed":1,"count":20,"family":"k3","mc_runs":200,"fpt_seeds":20,"max_k":2,
 *  "checks":[...],"csv":false}
 * csv_out may be NULL. Returns FMD_INFEASIBLE when a check fails. */
FMDEL_API fmd_status fmd_verify(const char* spec_json, char** json_out, char** csv_out);

/* Instance generator. spec_json:
 * {"generator":"gnp","n_min":6,"n_max":9,"params":{...},"weights":[1,5],
 *  "seed":1,"format":"edgelist"}  ->  graph text. */
FMDEL_API fmd_status fmd_gen(const char* spec_json, char** text_out);

#ifdef __cplusplus
}
#endif

#endif /* FMDEL_H */
