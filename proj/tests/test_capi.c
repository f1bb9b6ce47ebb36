/* Exercises the C interface from plain C. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "pgap/pgap.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

int main(void) {
  EXPECT(strcmp(pgap_version(), "") != 0);
  EXPECT(pgap_schema_version() == 1);

  pgap_curve* curve = NULL;
  EXPECT(pgap_curve_from_catalog("q16", &curve) == PGAP_OK);
  int genus = 0, n = 0;
  uint64_t q = 0;
  size_t count = 0;
  EXPECT(pgap_curve_genus(curve, &genus) == PGAP_OK && genus == 6);
  EXPECT(pgap_curve_degree(curve, &n) == PGAP_OK && n == 4);
  EXPECT(pgap_curve_field_order(curve, &q) == PGAP_OK && q == 16);
  EXPECT(pgap_curve_point_count(curve, &count) == PGAP_OK && count == 39);

  pgap_oracle* oracle = NULL;
  EXPECT(pgap_oracle_new(curve, &oracle) == PGAP_OK);
  int dim = -1;
  EXPECT(pgap_oracle_dimension(oracle, 8, 2, 0, &dim) == PGAP_OK && dim == 6);
  EXPECT(pgap_oracle_dimension(oracle, 5, 0, 0, &dim) == PGAP_OK && dim == 2);
  pgap_oracle_free(oracle);

  pgap_code* code = NULL;
  EXPECT(pgap_code_build(curve, 9, 4, 0, 1, &code) == PGAP_OK);
  int length = 0, dimension = 0, goppa = 0, holds = 0;
  EXPECT(pgap_code_params(code, &length, &dimension, &goppa) == PGAP_OK);
  EXPECT(length == 37 && dimension == 29 && goppa == 3);
  EXPECT(pgap_code_verify_floor(code, 5, 10000000, 1, &holds) == PGAP_OK && holds == 1);
  EXPECT(pgap_code_verify_floor(code, 6, 10, 1, &holds) == PGAP_BUDGET_EXCEEDED);
  EXPECT(strstr(pgap_last_error(), "exceeds budget") != NULL);
  pgap_code_free(code);
  EXPECT(pgap_code_build(curve, 5, 5, 5, 1, &code) == PGAP_INVALID_ARGUMENT && code == NULL);
  pgap_curve_free(curve);

  /* Errors. */
  EXPECT(pgap_curve_from_catalog("no-such-curve", &curve) == PGAP_INVALID_ARGUMENT && curve == NULL);
  EXPECT(strlen(pgap_last_error()) > 0);
  EXPECT(pgap_curve_from_json("{not json", &curve) == PGAP_INVALID_ARGUMENT);
  EXPECT(pgap_curve_from_json("{\"p\":2,\"k\":1,\"n\":2,\"g_coeffs\":[]}", &curve) == PGAP_INVALID_ARGUMENT);
  EXPECT(pgap_curve_genus(NULL, &genus) == PGAP_INVALID_ARGUMENT);
  EXPECT(pgap_curve_from_json("{\"p\":2,\"k\":3,\"n\":3,\"g_coeffs\":[]}", &curve) == PGAP_OK);
  EXPECT(pgap_curve_point_count(curve, &count) == PGAP_OK && count == 24);
  pgap_curve_free(curve);

  /* Commands. */
  char* report = NULL;
  char* csv = NULL;
  EXPECT(pgap_run("gaps", "{\"n\": 4}", &report, &csv) == PGAP_OK);
  EXPECT(report && strstr(report, "\"schema_version\": 1") != NULL);
  EXPECT(csv && strncmp(csv, "point,gap\n", 10) == 0);
  pgap_string_free(report);
  pgap_string_free(csv);

  EXPECT(pgap_run("gaps", "{\"n\": 2}", &report, NULL) == PGAP_INVALID_ARGUMENT && report == NULL);
  EXPECT(pgap_run("nonsense", "{}", &report, NULL) == PGAP_INVALID_ARGUMENT);
  EXPECT(pgap_run("gaps", "[1]", &report, NULL) == PGAP_INVALID_ARGUMENT);
  EXPECT(pgap_run("code", "{\"curve_file\": \"/nonexistent.json\", \"i\": 2, \"j\": 1}", &report, NULL) == PGAP_IO);

  /* A failing suite still returns its report. */
  EXPECT(pgap_run("verify", "{\"n_max\": 3, \"inject\": \"corrupted-modulus\", \"codes\": false}", &report, NULL) ==
         PGAP_INVARIANT_FAILURE);
  EXPECT(report && strstr(report, "\"result\": \"FAIL\"") != NULL);
  pgap_string_free(report);

  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API: all checks passed\n");
  return 0;
}
