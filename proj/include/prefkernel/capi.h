/* C API for the prefkernel shared library.
 *
 * All functions return a pk_status; results come back through out
 * parameters. Strings returned through char** are heap-allocated and must be
 * released with pk_string_free. Handles are opaque and must be released with
 * their matching *_free call. On any error, pk_last_error() returns a
 * thread-local description of what went wrong.
 */
#ifndef PREFKERNEL_CAPI_H
#define PREFKERNEL_CAPI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pk_status {
    PK_OK = 0,
    PK_ERR_INVALID_ARGUMENT = 1,
    PK_ERR_PARSE = 2,
    PK_ERR_UNKNOWN_SCENARIO = 3,
    PK_ERR_CLIQUE_CAP = 4,
    PK_ERR_IO = 5,
    PK_ERR_INTERNAL = 6
} pk_status;

typedef struct pk_space pk_space;
typedef struct pk_preference pk_preference;

const char* pk_status_name(pk_status status);
/* Thread-local message describing the most recent error ("" if none). */
const char* pk_last_error(void);
void pk_string_free(char* s);

/* ---- ground spaces ---- */

pk_status pk_space_from_json(const char* json_text, pk_space** out);
pk_status pk_space_to_json(const pk_space* space, char** out_json);
void pk_space_free(pk_space* space);
pk_status pk_space_point_count(const pk_space* space, int32_t* out);
pk_status pk_space_distance(const pk_space* space, int32_t i, int32_t j, double* out);
/* Hausdorff distance between two member-index sets of the same space. */
pk_status pk_hausdorff_distance(const pk_space* space, const int32_t* a, size_t a_len,
                                const int32_t* b, size_t b_len, double* out);

/* ---- preferences ---- */

pk_status pk_preference_from_json(const pk_space* space, const char* json_text,
                                  pk_preference** out);
pk_status pk_preference_from_multi_utility_json(const pk_space* space,
                                                const char* json_text,
                                                pk_preference** out);
pk_status pk_preference_to_json(const pk_preference* pref, char** out_json);
void pk_preference_free(pk_preference* pref);
pk_status pk_preference_holds(const pk_preference* pref, int32_t i, int32_t j, int* out);
/* JSON array of axiom violations; empty array means a valid preference. */
pk_status pk_preference_validate(const pk_preference* pref, char** out_json);

/* Maximal (resp. minimal) elements of the member set. out_buf receives at
 * most buf_len indices; *out_len is always set to the full count. */
pk_status pk_max_elements(const pk_preference* pref, const int32_t* members,
                          size_t members_len, int32_t* out_buf, size_t buf_len,
                          size_t* out_len);
pk_status pk_min_elements(const pk_preference* pref, const int32_t* members,
                          size_t members_len, int32_t* out_buf, size_t buf_len,
                          size_t* out_len);

/* Maximal comparability domains as a JSON collection; fails with
 * PK_ERR_CLIQUE_CAP when enumeration exceeds clique_cap (0 = default cap). */
pk_status pk_maximal_domains(const pk_preference* pref, const int32_t* members,
                             size_t members_len, size_t clique_cap, char** out_json);

pk_status pk_relation_hausdorff(const pk_preference* p, const pk_preference* q,
                                double* out);

/* ---- scenarios, verifiers, reports ---- */

/* JSON array of catalog entries {name, verifier, expected_verdict}. */
pk_status pk_scenario_names(char** out_json);

/* Runs a verifier over a scenario. `spec_json` is either a scenario name
 * (plain string, e.g. "diagonal-block") or a full spec object; overrides
 * like {"horizon": 40, "policy": {...}, "seed": 7} may be merged into it.
 * The report JSON carries verdict, expected_verdict and matches_expected. */
pk_status pk_run_scenario(const char* spec_json, const char* verifier,
                          size_t clique_cap, char** out_report_json);

/* Runs the whole catalog plus the differential campaigns. The summary JSON
 * carries per-entry rows, the differential comparisons as a JSON-lines
 * stream, and an "all_ok" flag. A positive horizon_override shortens every
 * scenario. */
pk_status pk_run_suite(size_t clique_cap, int horizon_override,
                       char** out_summary_json);

/* Per-term CSV summary for a scenario (one row per n). */
pk_status pk_scenario_csv(const char* spec_json, size_t clique_cap, char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* PREFKERNEL_CAPI_H */
