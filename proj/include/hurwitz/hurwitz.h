#ifndef HURWITZ_H
#define HURWITZ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HURWITZ_BUILDING_LIBRARY)
#define HW_API __attribute__((visibility("default")))
#else
#define HW_API
#endif

typedef enum hw_status {
    HW_OK = 0,
    HW_ERR_ARGUMENT = 1,
    HW_ERR_SIZE_LIMIT = 2,
    HW_ERR_CENTRALITY = 3,
    HW_ERR_SINGULAR = 4,
    HW_ERR_VERIFICATION = 5,
    HW_ERR_PARSE = 6,
    HW_ERR_CONSISTENCY = 7,
    HW_ERR_INTERNAL = 8
} hw_status;

typedef struct hw_context hw_context;
typedef struct hw_tau hw_tau;

/* Output strings are malloc'd; release them with hw_string_free. */

HW_API hw_status hw_context_create(hw_context** out);
HW_API void hw_context_destroy(hw_context* ctx);
/* Message of the last failed call on ctx ("" if none). */
HW_API const char* hw_last_error(const hw_context* ctx);
HW_API void hw_string_free(char* s);

HW_API hw_status hw_chartable(hw_context* ctx, int n, char** out_json);

/* kind: plain|monotone|strict|mixed|multi. p is used by mixed; segments
   ("2,1") by multi, where steps is ignored. */
HW_API hw_status hw_walks(hw_context* ctx, int n, const char* from, const char* to, const char* kind, int steps,
                          int p, const char* segments, int transitive, char** out_count, char** out_json);

/* twist: plain|monotone|strict|weak-strict|mixed|multi, each parameter capped at cap. */
HW_API hw_status hw_gmatrix(hw_context* ctx, int n, const char* twist, int cap, char** out_json);

/* family: vacuum|okounkov|hciz|alpha_q|multimonotone|plain|monotone|strict.
   alpha is a rational string (alpha_q only); m the segment count (multimonotone). */
HW_API hw_status hw_tau_build(hw_context* ctx, const char* family, int N, const char* alpha, int m, int cap,
                              int n_max, hw_tau** out);
HW_API void hw_tau_destroy(hw_tau* t);
/* a, b: comma-separated rationals. Writes a series JSON object. */
HW_API hw_status hw_tau_eval(hw_context* ctx, const hw_tau* t, const char* a, const char* b, char** out_json);
/* Coefficients of log tau as {"terms":[{"x":..,"y":..,"series":{..}}]}. */
HW_API hw_status hw_tau_log(hw_context* ctx, const hw_tau* t, char** out_json);
/* {"coefficients":[{"lambda":..,"r":{..}}],"powersum":[{"x":..,"y":..,"series":{..}}]} */
HW_API hw_status hw_tau_coefficients(hw_context* ctx, const hw_tau* t, char** out_json);

/* Normalized HCIZ determinant as a series JSON object. */
HW_API hw_status hw_hciz_determinant(hw_context* ctx, int N, const char* a, const char* b, int z_cap,
                                     char** out_json);

/* format: json|csv. step_max caps b, k, k+l, p+k or d1+..+dm. */
HW_API hw_status hw_table(hw_context* ctx, const char* family, int n_max, int step_max, int segments,
                          int connected, const char* format, char** out);

/* suite: characters|center|walks|tau|all; n_max 0 selects the suite default.
   *passed is set to 1 iff every check held. The report has one line per check. */
HW_API hw_status hw_verify(hw_context* ctx, const char* suite, int n_max, int N, int cap, uint64_t seed,
                           int* passed, char** out_report, char** out_timing);

HW_API hw_status hw_alpha_q_report(hw_context* ctx, char** out_markdown);

#ifdef __cplusplus
}
#endif

#endif
