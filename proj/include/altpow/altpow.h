#ifndef ALTPOW_H
#define ALTPOW_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define ALTPOW_API __attribute__((visibility("default")))
#else
#define ALTPOW_API
#endif

typedef struct altpow_context altpow_context;
typedef struct altpow_result altpow_result;

typedef enum altpow_status {
  ALTPOW_OK = 0,
  ALTPOW_ERR_INVALID_ARGUMENT = 1,
  ALTPOW_ERR_ORDER_BOUND_EXCEEDED = 2,
  ALTPOW_ERR_TOO_MANY_SYLOWS = 3,
  ALTPOW_ERR_NOT_COCYCLE = 4,
  ALTPOW_ERR_NOT_COMMUTING = 5,
  ALTPOW_ERR_NOT_CLASS_FUNCTION = 6,
  ALTPOW_ERR_CONSTRAINT_MISMATCH = 7,
  ALTPOW_ERR_NOT_UNIT = 8,
  ALTPOW_ERR_INTERNAL = 9,
  ALTPOW_ERR_BAD_JSON = 10,
  ALTPOW_ERR_NULL_ARGUMENT = 11
} altpow_status;

ALTPOW_API const char* altpow_version(void);
ALTPOW_API const char* altpow_status_string(altpow_status status);
/* Process exit code a command-line front end should use for this status. */
ALTPOW_API int altpow_status_exit_code(altpow_status status);

ALTPOW_API altpow_context* altpow_context_create(void);
ALTPOW_API void altpow_context_destroy(altpow_context* ctx);
ALTPOW_API altpow_status altpow_context_set_order_bound(altpow_context* ctx, uint64_t bound);
ALTPOW_API altpow_status altpow_context_set_threads(altpow_context* ctx, unsigned threads);
/* NULL disables the cache. */
ALTPOW_API altpow_status altpow_context_set_cache_dir(altpow_context* ctx, const char* dir);
/* Default directory: $ALTPOW_CACHE, then $XDG_CACHE_HOME/altpow, then ~/.cache/altpow. */
ALTPOW_API const char* altpow_default_cache_dir(void);
ALTPOW_API const char* altpow_context_last_error(const altpow_context* ctx);

/* request_json: {"command": ..., "params": {...}}. On success *out owns the result. */
ALTPOW_API altpow_status altpow_run(altpow_context* ctx, const char* request_json, altpow_result** out);

ALTPOW_API const char* altpow_result_json(const altpow_result* result);
ALTPOW_API int altpow_result_cache_hit(const altpow_result* result);
ALTPOW_API size_t altpow_result_warning_count(const altpow_result* result);
ALTPOW_API const char* altpow_result_warning(const altpow_result* result, size_t index);
ALTPOW_API void altpow_result_destroy(altpow_result* result);

#ifdef __cplusplus
}
#endif

#endif
