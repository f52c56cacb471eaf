/* symcan: exact symbol analysis of constant-coefficient differential operators. */
#ifndef SYMCAN_SYMCAN_H
#define SYMCAN_SYMCAN_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SYMCAN_API __declspec(dllexport)
#else
#define SYMCAN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symcan_status {
  SYMCAN_OK = 0,
  SYMCAN_ERR_PARSE = 1,
  SYMCAN_ERR_VALIDATION = 2,
  SYMCAN_ERR_SHAPE = 3,
  SYMCAN_ERR_DOMAIN = 4,
  SYMCAN_ERR_BUDGET = 5,
  SYMCAN_ERR_INTERNAL = 6,
  SYMCAN_ERR_ARGUMENT = 7 /* null pointer or bad option value */
} symcan_status;

typedef enum symcan_role {
  SYMCAN_ROLE_DEFAULT = 0, /* role recorded in the input (catalog entries carry one) */
  SYMCAN_ROLE_OPERATOR = 1,
  SYMCAN_ROLE_CONSTRAINT = 2
} symcan_role;

typedef struct symcan_operator symcan_operator;

typedef struct symcan_analyze_options {
  uint64_t seed;
  unsigned max_depth;
  uint64_t box_budget;
  symcan_role role;
  int include_timings;
} symcan_analyze_options;

SYMCAN_API const char* symcan_version(void);
SYMCAN_API const char* symcan_status_name(symcan_status status);
/* Message of the last failed call on this thread; never null. */
SYMCAN_API const char* symcan_last_error(void);
/* Releases strings returned through char** out-parameters. */
SYMCAN_API void symcan_free(char* text);

/* spec: "catalog:name?k=v&..." or a path to an operator JSON file. */
SYMCAN_API symcan_status symcan_operator_load(const char* spec, symcan_operator** out);
SYMCAN_API symcan_status symcan_operator_parse(const char* json_text, const char* source_name, symcan_operator** out);
SYMCAN_API void symcan_operator_free(symcan_operator* op);
SYMCAN_API symcan_status symcan_operator_shape(const symcan_operator* op, size_t* n, size_t* dim_v, size_t* dim_e,
                                               unsigned* order);
SYMCAN_API symcan_status symcan_operator_json(const symcan_operator* op, char** out);

SYMCAN_API void symcan_analyze_options_init(symcan_analyze_options* opts);
/* certified is set to 1 when no verdict is UNDECIDED or sampled. */
SYMCAN_API symcan_status symcan_analyze(const symcan_operator* op, const symcan_analyze_options* opts, char** report,
                                        int* certified);
SYMCAN_API symcan_status symcan_compat(const symcan_operator* op, uint64_t seed, char** report, int* identity_holds,
                                       int* kernels_match);
SYMCAN_API symcan_status symcan_verify(const char* report_json, char** transcript, int* all_ok);

/* request: JSON object with "kind" and optional "op", "control", "e", "ell",
   "lambda", "grid" ([N, T]), "field", "preset", "refine", "seed". */
SYMCAN_API symcan_status symcan_experiment(const char* request_json, char** csv, char** manifest, int* converged);

SYMCAN_API symcan_status symcan_catalog_list(char** json);

#ifdef __cplusplus
}
#endif

#endif /* SYMCAN_SYMCAN_H */
