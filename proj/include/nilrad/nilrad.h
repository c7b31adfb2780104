/* Copyright 2026 The nilrad Authors
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

/* C interface to nilrad. All handles are opaque; every function that can
 * fail returns a nilrad_status and leaves a message retrievable through
 * nilrad_last_error() on the calling thread. Output pointers are only
 * written on success. */

#ifndef NILRAD_NILRAD_H_
#define NILRAD_NILRAD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NILRAD_BUILDING_LIBRARY)
#    define NILRAD_API __declspec(dllexport)
#  else
#    define NILRAD_API __declspec(dllimport)
#  endif
#else
#  define NILRAD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nilrad_status
{
  NILRAD_OK = 0,
  NILRAD_INVALID_ARGUMENT = 1,
  NILRAD_PARSE_ERROR = 2,
  NILRAD_NOT_PRIME = 3,
  NILRAD_NON_NILPOTENT = 4,
  NILRAD_NOT_RICHARDSON = 5,
  NILRAD_UNSUPPORTED = 6,
  NILRAD_CASE_VACUOUS = 7,
  NILRAD_WRONG_ARITY = 8,
  NILRAD_PRECONDITION_VIOLATED = 9,
  NILRAD_CAP_EXCEEDED = 10,
  NILRAD_IO_ERROR = 11,
  NILRAD_INTERNAL_ERROR = 12,
  /* A flag or flag value was rejected; the message names the flag. */
  NILRAD_USAGE_ERROR = 13
} nilrad_status;

NILRAD_API const char * nilrad_version(void);

/* Message of the last failure on this thread; "" if none. */
NILRAD_API const char * nilrad_last_error(void);

NILRAD_API const char * nilrad_status_name(nilrad_status status);

/* Owned text buffer. */
typedef struct nilrad_text nilrad_text;

NILRAD_API const char * nilrad_text_data(const nilrad_text * text);
NILRAD_API size_t nilrad_text_size(const nilrad_text * text);
NILRAD_API void nilrad_text_destroy(nilrad_text * text);

/* A standard parabolic of sl(n+1) over F_p, given by its dimension vector. */
typedef struct nilrad_parabolic nilrad_parabolic;

/* dims: comma-separated block sizes such as "3,2,3,1". */
NILRAD_API nilrad_status nilrad_parabolic_create(
  const char * dims, uint32_t prime, nilrad_parabolic ** out);
NILRAD_API void nilrad_parabolic_destroy(nilrad_parabolic * parabolic);

/* n, so the matrices are (n+1) x (n+1). */
NILRAD_API size_t nilrad_parabolic_rank(const nilrad_parabolic * parabolic);
NILRAD_API uint32_t nilrad_parabolic_prime(const nilrad_parabolic * parabolic);

/* Dimensions of u, of the centralizer of the Richardson element in u, and
 * of that centralizer's center. Any output pointer may be NULL. */
NILRAD_API nilrad_status nilrad_parabolic_dimensions(
  const nilrad_parabolic * parabolic, size_t * nilradical, size_t * centralizer, size_t * center);

/* Number of maximal elementary subalgebras containing the Richardson
 * element and the saturation rank. cap bounds dim(centralizer / center). */
NILRAD_API nilrad_status nilrad_parabolic_elementary(
  const nilrad_parabolic * parabolic, size_t cap, size_t * count, size_t * saturation_rank);

NILRAD_API nilrad_status nilrad_parabolic_partition(
  const nilrad_parabolic * parabolic, nilrad_text ** out);
NILRAD_API nilrad_status nilrad_parabolic_richardson(
  const nilrad_parabolic * parabolic, nilrad_text ** out);
NILRAD_API nilrad_status nilrad_parabolic_quiver_dot(
  const nilrad_parabolic * parabolic, nilrad_text ** out);

/* A tool invocation: verb plus flags, as on the command line. */
typedef struct nilrad_command nilrad_command;

/* verb: quiver, richardson, partition, centralizer, esub, srk or verify. */
NILRAD_API nilrad_status nilrad_command_create(const char * verb, nilrad_command ** out);
NILRAD_API void nilrad_command_destroy(nilrad_command * command);

/* flag: d, p, n, tables, format, cap, jobs, out or batch (dashes optional). */
NILRAD_API nilrad_status nilrad_command_set(
  nilrad_command * command, const char * flag, const char * value);

/* Runs the command. exit_code receives 0 (all checks pass) or 1 (a check
 * failed). output receives the artifact, empty when written to --out. */
NILRAD_API nilrad_status nilrad_command_run(
  const nilrad_command * command, nilrad_text ** output, int * exit_code);

#ifdef __cplusplus
}
#endif

#endif /* NILRAD_NILRAD_H_ */
