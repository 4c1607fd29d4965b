/* C interface over the semistar core. Handles are opaque; every call
   returns a status and leaves a message in ss_last_error() on failure.
   Strings returned through char** are owned by the caller and released
   with ss_string_free. */
#ifndef SEMISTAR_C_H
#define SEMISTAR_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SS_API __declspec(dllexport)
#else
#define SS_API __attribute__((visibility("default")))
#endif

typedef enum {
  SS_OK = 0,
  SS_ERR_PARSE = 1,
  SS_ERR_SEMANTIC = 2,
  SS_ERR_UNSUPPORTED = 3,
  SS_ERR_ZERO = 4,
  SS_ERR_INTERNAL = 5,
  SS_ERR_ARG = 6,
  /* scenarios ran but at least one assertion failed */
  SS_FAIL = 7
} ss_status;

typedef enum { SS_FORMAT_TEXT = 0, SS_FORMAT_JSON = 1 } ss_format;

typedef struct ss_domain ss_domain;

SS_API const char* ss_version(void);
SS_API const char* ss_status_name(ss_status s);

SS_API ss_status ss_domain_parse(const char* text, ss_domain** out);
SS_API void ss_domain_free(ss_domain* d);
SS_API ss_status ss_domain_describe(const ss_domain* d, char** out);

/* Parses expr against the domain and prints "expr = value". */
SS_API ss_status ss_eval(const ss_domain* d, const char* expr, ss_format format, char** out);

/* names: comma-separated scenario names or "all". */
SS_API ss_status ss_run_scenarios(const char* names, uint64_t seed, int samples, int bound, ss_format format,
                                  char** out);
/* Newline-separated list of shipped scenario names. */
SS_API ss_status ss_scenario_names(char** out);

/* Thread-local; valid until the next failing call on this thread. */
SS_API const char* ss_last_error(void);
SS_API void ss_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
