/* Copyright 2026 fermenc Contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface of the fermenc shared library.
 *
 * fermenc searches for translationally invariant fermion-to-qubit encodings
 * tailored to a target operator set and hardware connectivity, verifies
 * known encodings, and certifies distance-2 error detection.
 *
 * All objects are opaque handles. Functions returning int use the
 * fermenc_status codes below; when they accept an `errmsg` out-parameter a
 * failure stores a message that must be released with fermenc_string_free.
 * Report strings returned through fermenc_result_report stay owned by the
 * result handle.
 */

#ifndef FERMENC_FERMENC_H
#define FERMENC_FERMENC_H

#include <stdint.h>

#ifndef FERMENC_API
#define FERMENC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fermenc_problem fermenc_problem;
typedef struct fermenc_result fermenc_result;

typedef enum fermenc_status {
    FERMENC_OK = 0,               /* found / verified */
    FERMENC_NO_SOLUTION = 1,      /* exhaustive search found nothing in the class */
    FERMENC_VERIFY_FAIL = 2,      /* encoding invalid or stated properties differ */
    FERMENC_INCONCLUSIVE = 3,     /* aborted by a node or time limit */
    FERMENC_PARSE_ERROR = 4,      /* malformed input text */
    FERMENC_INVALID_ARGUMENT = 5, /* bad parameter or unusable handle state */
    FERMENC_INTERNAL_ERROR = 6    /* invariant violation inside the library */
} fermenc_status;

FERMENC_API const char* fermenc_version(void);

/* --- problems ----------------------------------------------------------- */

/* Parses a "fermenc/1" problem file. */
FERMENC_API int fermenc_problem_parse(const char* text, fermenc_problem** out, char** errmsg);

/* Loads a catalog entry by name: a golden encoding (full problem with the
 * known sigma and expectations), a system, or a hardware cell. */
FERMENC_API int fermenc_problem_from_catalog(const char* name, fermenc_problem** out, char** errmsg);

/* Builds a problem from catalog system and hardware names; either may be
 * NULL or empty to leave that part unset. */
FERMENC_API int fermenc_problem_assemble(const char* system, const char* hardware, fermenc_problem** out,
                                         char** errmsg);

/* Overrides one search parameter, e.g. ("max_cost", "2"). Keys mirror the
 * [params] section of the file format. */
FERMENC_API int fermenc_problem_set_param(fermenc_problem* p, const char* key, const char* value, char** errmsg);

/* Serializes the problem back to file text. Free with fermenc_string_free. */
FERMENC_API int fermenc_problem_text(const fermenc_problem* p, char** text, char** errmsg);

FERMENC_API void fermenc_problem_free(fermenc_problem* p);

/* --- running ------------------------------------------------------------ */

typedef void (*fermenc_progress_fn)(uint64_t nodes, int depth, int incumbent_cost, void* user);

/* Branch-and-bound search. `progress` may be NULL. */
FERMENC_API int fermenc_search(const fermenc_problem* p, fermenc_progress_fn progress, void* user,
                               fermenc_result** out, char** errmsg);

/* Checks the problem's encoding against the encoding condition, recomputes
 * weights/costs/stabilizers/distance and compares any [expect] block. */
FERMENC_API int fermenc_verify(const fermenc_problem* p, fermenc_result** out, char** errmsg);

/* Stabilizer extraction and distance-2 scan only. Returns FERMENC_OK when
 * the encoding detects all single-qubit errors (possibly up to idle qubits),
 * FERMENC_NO_SOLUTION when it does not. */
FERMENC_API int fermenc_distance(const fermenc_problem* p, fermenc_result** out, char** errmsg);

/* --- results ------------------------------------------------------------ */

/* Full report text; owned by the result handle. */
FERMENC_API const char* fermenc_result_report(const fermenc_result* r);
FERMENC_API int fermenc_result_status(const fermenc_result* r);
FERMENC_API void fermenc_result_free(fermenc_result* r);

/* --- catalog ------------------------------------------------------------ */

/* Human-readable listing of built-in systems, cells and golden encodings. */
FERMENC_API int fermenc_catalog_list(char** text, char** errmsg);

/* Emits a catalog entry as problem-file text. */
FERMENC_API int fermenc_catalog_emit(const char* name, char** text, char** errmsg);

FERMENC_API void fermenc_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FERMENC_FERMENC_H */
