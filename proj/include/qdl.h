// Copyright 2026 The qdl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDL_H_
#define QDL_H_

#include <stddef.h>

#if defined(_WIN32)
#define QDL_API __declspec(dllexport)
#else
#define QDL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qdl_status {
  QDL_OK = 0,
  QDL_ERR_INVALID_ARGUMENT,
  QDL_ERR_PARSE,
  QDL_ERR_IO,
  QDL_ERR_NOT_A_GROUP,
  QDL_ERR_GROUP_TOO_LARGE,
  QDL_ERR_NOT_A_COCYCLE,
  QDL_ERR_NOT_NORMALIZED,
  QDL_ERR_IDENTITY_VIOLATION,
  QDL_ERR_DIVISION_BY_ZERO,
  QDL_ERR_LIFT_FAILURE,
  QDL_ERR_CAP_EXCEEDED,
  QDL_ERR_VERLINDE_NON_INTEGER,
  QDL_ERR_DIMENSION_MISMATCH,
  QDL_ERR_NOT_A_SUBCATEGORY,
  QDL_ERR_UNSUPPORTED_TRIPLE,
  QDL_ERR_INTERNAL
} qdl_status;

typedef enum qdl_format { QDL_FORMAT_JSON = 0, QDL_FORMAT_TEXT = 1, QDL_FORMAT_DOT = 2 } qdl_format;

typedef struct qdl_session qdl_session;

typedef struct qdl_options {
  const char* group;        /* builtin name (Z2, S3, ...) or path to a group file */
  const char* cocycle;      /* "trivial", "cyclic:n,q" or path to a cocycle file; NULL = trivial */
  size_t order_cap;         /* 0 = default */
  size_t solution_cap;      /* 0 = default */
  int skip_cocycle_check;   /* nonzero: load the table as is, so verify can report it */
} qdl_options;

QDL_API const char* qdl_version(void);
QDL_API const char* qdl_status_name(qdl_status status);

/* Message of the last failed call on this thread. */
QDL_API const char* qdl_last_error(void);

QDL_API qdl_status qdl_session_create(const qdl_options* opts, qdl_session** out);
QDL_API void qdl_session_destroy(qdl_session* s);

/* String results are NUL-terminated and released with qdl_string_free. */
QDL_API void qdl_string_free(char* str);

QDL_API qdl_status qdl_group_info(qdl_session* s, char** out_json);
/* QDL_FORMAT_JSON or QDL_FORMAT_TEXT. */
QDL_API qdl_status qdl_subcats_list(qdl_session* s, qdl_format format, char** out);
/* QDL_FORMAT_JSON or QDL_FORMAT_DOT. */
QDL_API qdl_status qdl_lattice_export(qdl_session* s, qdl_format format, char** out);
/* triple_json: {"K":[..]|"K_index":i, "H":[..]|"H_index":j, "B":[..] (optional)}. */
QDL_API qdl_status qdl_invariants(qdl_session* s, const char* triple_json, char** out_json);
/* *passed is 1 when every check passes. */
QDL_API qdl_status qdl_verify(qdl_session* s, char** out_json, int* passed);

QDL_API qdl_status qdl_subcat_count(qdl_session* s, size_t* out);
QDL_API qdl_status qdl_is_prime(qdl_session* s, int* out);
QDL_API qdl_status qdl_nondegenerate_count(qdl_session* s, int* out);

#ifdef __cplusplus
}
#endif

#endif  // QDL_H_
