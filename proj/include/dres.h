/*
 * Copyright 2026 The dres Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef DRES_H
#define DRES_H

/* C interface of the dres library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every call returns a status code; on failure dres_last_error() describes
 * the problem for the calling thread. Strings returned through char** are
 * owned by the caller and released with dres_string_free. */

#include <stdint.h>

#if defined(_WIN32)
#define DRES_API __declspec(dllexport)
#else
#define DRES_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dres_ratfun dres_ratfun;
typedef struct dres_report dres_report;

typedef enum {
    DRES_OK = 0,
    DRES_ERR_PARSE = 1,     /* syntax error, see dres_last_error_offset */
    DRES_ERR_PARAM = 2,     /* q in {0, 1, -1}, m < 2, tree bound < 1, ... */
    DRES_ERR_DIV_ZERO = 3,  /* division by the zero rational function */
    DRES_ERR_INVALID = 4,   /* null pointer or malformed argument */
    DRES_ERR_INTERNAL = 5
} dres_status;

typedef enum { DRES_SUMMABLE = 0, DRES_NOT_SUMMABLE = 1, DRES_UNDECIDED = 2 } dres_verdict;

DRES_API const char* dres_version(void);

/* Message of the last failed call on this thread, "" if none. */
DRES_API const char* dres_last_error(void);
/* Byte offset of the last parse error on this thread, -1 if none. */
DRES_API long dres_last_error_offset(void);

DRES_API void dres_string_free(char* s);

DRES_API dres_status dres_parse(const char* text, dres_ratfun** out);
DRES_API void dres_ratfun_free(dres_ratfun* f);
/* Normalized form in the expression grammar. */
DRES_API dres_status dres_ratfun_to_string(const dres_ratfun* f, char** out);

DRES_API dres_status dres_analyze_shift(const dres_ratfun* f, dres_report** out);
/* q is a rational literal such as "2", "-3/2". */
DRES_API dres_status dres_analyze_q(const dres_ratfun* f, const char* q, dres_report** out);
DRES_API dres_status dres_analyze_mahler(const dres_ratfun* f, long m, int tree_bound, dres_report** out);

DRES_API dres_status dres_report_verdict(const dres_report* r, dres_verdict* out);
DRES_API dres_status dres_report_json(const dres_report* r, char** out);
DRES_API dres_status dres_report_text(const dres_report* r, char** out);
DRES_API void dres_report_free(dres_report* r);

/* Generated instances, two lines each (header comment, expression).
 * kase is "shift", "q" or "mahler"; param is q for "q", m for "mahler" and
 * ignored otherwise. Instance i uses seed + i and `planted` obstructions. */
DRES_API dres_status dres_generate_corpus(const char* kase, const char* param, uint64_t seed, int count,
                                          int planted, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DRES_H */
