/* Copyright 2026 The peircelex Authors
 * SPDX-License-Identifier: Apache-2.0 */

/* C interface to the peircelex compiler. All functions return a plx_status;
 * on failure plx_last_error() holds a message for the calling thread.
 * Output goes into plx_buffer objects owned by the caller. */

#ifndef PEIRCELEX_PEIRCELEX_H
#define PEIRCELEX_PEIRCELEX_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PLX_BUILDING)
#    define PLX_API __declspec(dllexport)
#  else
#    define PLX_API __declspec(dllimport)
#  endif
#else
#  define PLX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum plx_status {
  PLX_OK = 0,
  PLX_ERR_SYNTAX = 1,
  PLX_ERR_TYPE = 2,
  PLX_ERR_NO_PARSE = 3,
  PLX_ERR_MISSING_SYMBOL = 4,
  PLX_ERR_SHAPE_MISMATCH = 5,
  PLX_ERR_IO = 6,
  PLX_ERR_INVALID_ARGUMENT = 7,
  PLX_ERR_UNSUPPORTED = 8,
  PLX_ERR_INTERNAL = 9
} plx_status;

typedef enum plx_format {
  PLX_FORMAT_TEXT = 0,
  PLX_FORMAT_JSON = 1,
  PLX_FORMAT_DOT = 2,
  PLX_FORMAT_SVG = 3
} plx_format;

typedef enum plx_backend {
  PLX_BACKEND_FOL = 0,
  PLX_BACKEND_REL = 1,
  PLX_BACKEND_VECT = 2
} plx_backend;

/* Flags for plx_meaning. */
enum {
  PLX_MEANING_LOGIC = 1,     /* first-order formula */
  PLX_MEANING_ALL = 2,       /* every reading */
  PLX_MEANING_SINGLETONS = 4 /* singleton boxes become constants */
};

typedef struct plx_lexicon plx_lexicon;
typedef struct plx_buffer plx_buffer;

PLX_API const char* plx_version(void);
/* "ok", "syntax-error", "type-error", ... */
PLX_API const char* plx_status_name(plx_status status);
/* Message of the last failure on this thread, "" if none. */
PLX_API const char* plx_last_error(void);

PLX_API plx_status plx_lexicon_load(const char* path, plx_lexicon** out);
PLX_API plx_status plx_lexicon_from_json(const char* text, plx_lexicon** out);
PLX_API void plx_lexicon_free(plx_lexicon* lex);
/* Default target type as text, "s" when the lexicon names none. */
PLX_API plx_status plx_lexicon_default_target(const plx_lexicon* lex, plx_buffer** out);

/* target may be NULL for the lexicon default. */
PLX_API plx_status plx_parse(const plx_lexicon* lex, const char* sentence, const char* target, int all,
                             plx_format format, plx_buffer** out);
PLX_API plx_status plx_meaning(const plx_lexicon* lex, const char* sentence, const char* target,
                               unsigned flags, plx_format format, plx_buffer** out);
PLX_API plx_status plx_draw(const plx_lexicon* lex, const char* sentence, const char* target,
                            plx_format format, plx_buffer** out);
/* data_path: model file for FOL and REL, interpretation file for VECT. */
PLX_API plx_status plx_eval(const plx_lexicon* lex, const char* sentence, const char* target,
                            plx_backend backend, const char* data_path, plx_buffer** out);
PLX_API plx_status plx_check_equiv(const plx_lexicon* montague, const plx_lexicon* peirce,
                                   const char* sentence, unsigned max_universe, plx_buffer** report,
                                   int* equivalent);
/* Runs the built-in acceptance suite against the lexicons in lexicon_dir. */
PLX_API plx_status plx_selftest(const char* lexicon_dir, plx_buffer** report, int* all_passed);

/* NUL-terminated. */
PLX_API const char* plx_buffer_data(const plx_buffer* buf);
PLX_API size_t plx_buffer_size(const plx_buffer* buf);
PLX_API void plx_buffer_free(plx_buffer* buf);

#ifdef __cplusplus
}
#endif

#endif /* PEIRCELEX_PEIRCELEX_H */
