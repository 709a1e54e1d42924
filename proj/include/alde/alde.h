#ifndef ALDE_H
#define ALDE_H

#include <stddef.h>

#if defined(_WIN32)
#define ALDE_API __declspec(dllexport)
#else
#define ALDE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum alde_status {
  ALDE_OK = 0,
  ALDE_E_USAGE = 1,    /* bad or inconsistent configuration */
  ALDE_E_PARSE = 2,    /* malformed value or payload */
  ALDE_E_DOMAIN = 3,   /* parameters outside the admissible set */
  ALDE_E_SOLVE = 4,    /* synthesis found no (unique) operator */
  ALDE_E_IO = 5,
  ALDE_E_INTERNAL = 6,
  ALDE_E_ARG = 7       /* null handle or output pointer */
} alde_status;

typedef struct alde_config alde_config;
typedef struct alde_report alde_report;

ALDE_API const char* alde_version(void);
ALDE_API const char* alde_status_name(alde_status s);
/* Message of the last failed call on this thread; never NULL. */
ALDE_API const char* alde_last_error(void);

ALDE_API alde_status alde_config_new(alde_config** out);
ALDE_API void alde_config_free(alde_config* cfg);
/* Keys: alpha beta gamma d k a a0 nmax smax wordlen. */
ALDE_API alde_status alde_config_set(alde_config* cfg, const char* key, const char* value);

/* Suites: jacobi krall simplex darboux orth all multivariable. */
ALDE_API alde_status alde_verify(const alde_config* cfg, const char* suite, alde_report** out);
ALDE_API void alde_report_free(alde_report* r);
ALDE_API int alde_report_pass(const alde_report* r);
ALDE_API size_t alde_report_size(const alde_report* r);
ALDE_API size_t alde_report_failures(const alde_report* r);
/* Strings returned through char** are owned by the caller; release them
   with alde_string_free. */
ALDE_API alde_status alde_report_json(const alde_report* r, char** out);
ALDE_API alde_status alde_report_timing_json(const alde_report* r, char** out);

/* Tables: jacobi q qhat simplex Q operators gram; format "json" or "csv". */
ALDE_API alde_status alde_table(const alde_config* cfg, const char* kind, const char* format, char** out);

/* B_f and B_psi as JSON. f is "f2", "f3", a member name, a polynomial in t,
   or NULL for the first member found. *pass is set to 1 when every
   certification check holds. */
ALDE_API alde_status alde_krall_synth(const alde_config* cfg, const char* f, char** out, int* pass);

/* Writes text to path (replacing it). */
ALDE_API alde_status alde_write_file(const char* path, const char* text);

ALDE_API void alde_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
