/* C interface to the neutro computational-algebra engine.
 *
 * All functions are thread-compatible: one session per thread, or external
 * synchronization around a shared session. Strings returned through `out`
 * parameters are heap-allocated; release them with neutro_string_free.
 */
#ifndef NEUTRO_C_H
#define NEUTRO_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct neutro_session neutro_session; /* opaque */
typedef int64_t neutro_handle;

typedef enum neutro_status {
  NEUTRO_OK = 0,
  NEUTRO_EINVAL = 1,       /* malformed request or argument */
  NEUTRO_EUNSUPPORTED = 2, /* operation not supported for these inputs */
  NEUTRO_ECAP = 3,         /* enumeration or search cap exceeded */
  NEUTRO_ENOTFOUND = 4,    /* unknown command or handle */
  NEUTRO_EVERIFY = 5,      /* verification suite reported failures */
  NEUTRO_EINTERNAL = 6
} neutro_status;

const char* neutro_version(void);

neutro_session* neutro_session_new(void);
void neutro_session_free(neutro_session* s);

/* Message for the most recent failing call on this session; owned by the
 * session, valid until the next call. */
const char* neutro_last_error(const neutro_session* s);

/* One JSON command in, one JSON report out. Commands are documented in the
 * README ("scalar.mul", "ring.analyze", "group.analyze", "poly.mul",
 * "algebra.classify", "verify.all", ...). */
neutro_status neutro_run_json(neutro_session* s, const char* request_json, char** response_json);

void neutro_string_free(char* p);

/* Handle-based magma registry: build once, analyze repeatedly. */
neutro_status neutro_magma_build(neutro_session* s, const char* spec_json, neutro_handle* out);
neutro_status neutro_magma_json(neutro_session* s, neutro_handle h, char** magma_json);
neutro_status neutro_magma_csv(neutro_session* s, neutro_handle h, char** csv);
neutro_status neutro_handle_free(neutro_session* s, neutro_handle h);

/* Runs the verification suite; *failures receives the number of failing
 * criteria. Returns NEUTRO_EVERIFY when failures > 0. */
neutro_status neutro_verify_all(neutro_session* s, uint64_t seed, char** report_json,
                                int* failures);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NEUTRO_C_H */
