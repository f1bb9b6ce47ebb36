#ifndef PGAP_H
#define PGAP_H

/* C interface to the pgap library. All handles are opaque; every function
 * that can fail returns a pgap_status and leaves a message retrievable with
 * pgap_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define PGAP_API __declspec(dllexport)
#else
#define PGAP_API __attribute__((visibility("default")))
#endif

typedef enum pgap_status {
  PGAP_OK = 0,
  PGAP_INVALID_ARGUMENT = 1,
  PGAP_INVARIANT_FAILURE = 2,
  PGAP_IO = 3,
  PGAP_BUDGET_EXCEEDED = 4,
  PGAP_INSUFFICIENT_PRECISION = 5,
  PGAP_INTERNAL = 6
} pgap_status;

typedef struct pgap_curve pgap_curve;
typedef struct pgap_oracle pgap_oracle;
typedef struct pgap_code pgap_code;

PGAP_API const char* pgap_version(void);
PGAP_API int pgap_schema_version(void);
/* Message of the last failed call on this thread ("" if none). */
PGAP_API const char* pgap_last_error(void);
PGAP_API const char* pgap_status_name(pgap_status status);

/* Frees strings returned through char** out-parameters. */
PGAP_API void pgap_string_free(char* s);

/* Runs a command ("gaps", "pure-gaps", "dims", "code", "search", "reproduce",
 * "verify") with a JSON configuration object. On PGAP_OK or
 * PGAP_INVARIANT_FAILURE the JSON report (and CSV, if csv is not NULL) is
 * returned; invariant failure means the report records failed checks. */
PGAP_API pgap_status pgap_run(const char* command, const char* config_json, char** report_json, char** csv);

/* Curve from a JSON spec {p, k, modulus?, n, g_coeffs}; validated. */
PGAP_API pgap_status pgap_curve_from_json(const char* spec_json, pgap_curve** out);
/* Catalog curve by name, e.g. "q16". */
PGAP_API pgap_status pgap_curve_from_catalog(const char* name, pgap_curve** out);
PGAP_API void pgap_curve_free(pgap_curve* curve);
PGAP_API pgap_status pgap_curve_genus(const pgap_curve* curve, int* genus);
PGAP_API pgap_status pgap_curve_degree(const pgap_curve* curve, int* n);
PGAP_API pgap_status pgap_curve_field_order(const pgap_curve* curve, uint64_t* q);
/* Number of rational points over the base field (enumerated once, cached). */
PGAP_API pgap_status pgap_curve_point_count(pgap_curve* curve, size_t* count);

PGAP_API pgap_status pgap_oracle_new(const pgap_curve* curve, pgap_oracle** out);
PGAP_API void pgap_oracle_free(pgap_oracle* oracle);
/* l(a P1 + b P2 + c P3). */
PGAP_API pgap_status pgap_oracle_dimension(pgap_oracle* oracle, int a, int b, int c, int* dimension);

/* C_Omega(D, G) with G = a P1 + b P2 + c P3 and D the remaining rational
 * points; include_p3 keeps P3 in D (requires c == 0). */
PGAP_API pgap_status pgap_code_build(pgap_curve* curve, int a, int b, int c, int include_p3, pgap_code** out);
PGAP_API void pgap_code_free(pgap_code* code);
PGAP_API pgap_status pgap_code_params(const pgap_code* code, int* length, int* dimension, int* goppa_bound);
/* Checks that every w columns of the parity-check matrix are independent
 * (so d > w). budget caps the number of column subsets examined. */
PGAP_API pgap_status pgap_code_verify_floor(const pgap_code* code, int w, uint64_t budget, unsigned jobs,
                                            int* holds);

#ifdef __cplusplus
}
#endif

#endif
