/* hilco -- Hilbert coefficients and resolution bounds for graded Betti
 * tables. C interface of the shared library; every language binding and the
 * bundled CLI go through these calls.
 *
 * Conventions:
 *   - functions returning hc_status put their result behind an out pointer
 *     and return HC_OK on success; on failure the out pointer is untouched
 *     and hc_last_error() describes the problem (thread-local);
 *   - strings returned through char** are heap-allocated JSON documents and
 *     must be released with hc_string_free();
 *   - tables are opaque, immutable handles, safe to share across threads.
 */
#ifndef HILCO_H
#define HILCO_H

#include <stddef.h>
#include <stdint.h>

#if defined _WIN32
#define HILCO_API __declspec(dllexport)
#else
#define HILCO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hc_status {
	HC_OK = 0,
	HC_ERROR_PARSE = 1,   /* malformed input text */
	HC_ERROR_INVALID = 2, /* structural invariant violated */
	HC_ERROR_MATH = 3,    /* input data mathematically inconsistent */
	HC_ERROR_USAGE = 4    /* bad argument to an API call */
} hc_status;

typedef struct hc_table hc_table;

HILCO_API const char *hc_version(void);

/* Message of the most recent failure on this thread; empty string if the
 * last call succeeded. The pointer stays valid until the next API call. */
HILCO_API const char *hc_last_error(void);

/* --- tables ------------------------------------------------------------ */

HILCO_API hc_status hc_table_parse_json(const char *text, hc_table **out);
HILCO_API hc_status hc_table_parse_plain(const char *text, hc_table **out);
/* Sniffs the format: leading '{' means JSON, anything else plain. */
HILCO_API hc_status hc_table_parse_auto(const char *text, hc_table **out);

/* Koszul table of a complete intersection with the given degrees. */
HILCO_API hc_status hc_table_generate_ci(const int *degrees, size_t count,
                                         unsigned n, hc_table **out);

HILCO_API void hc_table_free(hc_table *t);

HILCO_API hc_status hc_table_to_json(const hc_table *t, char **out);
HILCO_API hc_status hc_table_to_plain(const hc_table *t, char **out);

HILCO_API unsigned hc_table_vars(const hc_table *t);  /* n */
HILCO_API int hc_table_length(const hc_table *t);     /* s */
HILCO_API int hc_table_quasi_pure(const hc_table *t); /* 1/0 */
/* Returns 1 and stores the socle shift when the diagram is symmetric. */
HILCO_API int hc_table_gorenstein(const hc_table *t, int *socle_out);

/* --- reports (JSON documents) ------------------------------------------ */

/* Shift profile, flags, coefficients by the series route, power-sum
 * residuals. max_l < 0 picks min(6, deg Q). */
HILCO_API hc_status hc_analyze_json(const hc_table *t, int max_l,
                                    char **json_out);

/* Bound verification rows for l = 0..min(max_l, n-s); *pass_out is 1 unless
 * a mathematical assertion failed (coefficient routes disagree, or a
 * quasi-pure symmetric table escapes its bounds). max_l < 0 picks
 * min(6, n-s). */
HILCO_API hc_status hc_verify_json(const hc_table *t, int max_l,
                                   char **json_out, int *pass_out);

/* Fitted Hilbert-polynomial coefficients next to the three formula routes;
 * for n = s the Hilbert function is compared with Q directly. */
HILCO_API hc_status hc_oracle_json(const hc_table *t, int max_l,
                                   char **json_out, int *pass_out);

/* Deterministic identity sweeps; full_sweep widens every range. */
HILCO_API hc_status hc_identities_json(int full_sweep, uint64_t seed,
                                       char **json_out, int *pass_out);

HILCO_API void hc_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* HILCO_H */
