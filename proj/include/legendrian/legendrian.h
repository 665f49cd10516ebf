/* Copyright 2026 The Legendrian Authors
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

/* C interface to the legendrian library.
 *
 * Every object is an opaque handle released by its *_free function; freeing
 * NULL is a no-op. Functions return an lg_status. On failure, output
 * arguments are left untouched and lg_last_error() describes the failure on
 * the calling thread until its next call into the library.
 *
 * Strings handed out by the library are NUL-terminated, owned by the caller
 * and released with lg_string_free. Augmentations are strings of '0' and '1'
 * indexed by generator id - 1.
 */

#ifndef LEGENDRIAN_LEGENDRIAN_H_
#define LEGENDRIAN_LEGENDRIAN_H_

#include <stddef.h>

#if defined(_WIN32)
#define LG_API __declspec(dllexport)
#else
#define LG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lg_status {
  LG_OK = 0,
  LG_ERR_SYNTAX = 1,
  LG_ERR_INVALID_POSITION = 2,
  LG_ERR_UNCLOSED_FRONT = 3,
  LG_ERR_NOT_A_KNOT = 4,
  LG_ERR_NO_POTENTIAL = 5,
  LG_ERR_MARK_POTENTIAL = 6,
  LG_ERR_NOT_TWO_BRIDGE = 7,
  LG_ERR_MCS_INVALID = 8,
  LG_ERR_NO_PAIRING = 9,
  LG_ERR_PATTERN_MISMATCH = 10,
  LG_ERR_PRECONDITION = 11,
  LG_ERR_DIMENSION = 12,
  LG_ERR_INTERNAL = 13,
  LG_ERR_ARGUMENT = 64, /* NULL handle or index out of range */
  LG_ERR_MEMORY = 65
} lg_status;

typedef struct lg_front lg_front;
typedef struct lg_dga lg_dga;
typedef struct lg_augs lg_augs;
typedef struct lg_rulings lg_rulings;
typedef struct lg_mcs lg_mcs;

LG_API const char* lg_last_error(void);
LG_API const char* lg_status_name(lg_status status);
LG_API void lg_string_free(char* s);

/* Fronts. Syntax errors report line:column. */
LG_API lg_status lg_front_parse(const char* text, lg_front** out);
LG_API void lg_front_free(lg_front* front);
LG_API lg_status lg_front_serialize(const lg_front* front, char** out);
LG_API lg_status lg_front_info(const lg_front* front, size_t* events,
                               size_t* marks, int* two_bridge);
/* The same front with its handleslide marks removed. */
LG_API lg_status lg_front_underlying(const lg_front* front, lg_front** out);

/* The Chekanov-Eliashberg DGA of the resolution, over Z2. */
typedef enum lg_generator_kind {
  LG_GEN_CROSSING = 0,
  LG_GEN_RIGHT_CUSP = 1
} lg_generator_kind;

typedef struct lg_generator {
  int id; /* 1-based */
  lg_generator_kind kind;
  int pos;
  int grading;
  size_t event; /* 0-based index into the front */
} lg_generator;

/* The front must be unmarked. */
LG_API lg_status lg_dga_new(const lg_front* front, lg_dga** out);
LG_API void lg_dga_free(lg_dga* dga);
LG_API size_t lg_dga_generator_count(const lg_dga* dga);
LG_API lg_status lg_dga_generator(const lg_dga* dga, int id, lg_generator* out);
/* Sum of words, e.g. "q1 q2 + 1"; "0" when empty. */
LG_API lg_status lg_dga_differential(const lg_dga* dga, int id, char** out);
/* Whether the word letters[0..len) has coefficient 1 in the boundary of id. */
LG_API lg_status lg_dga_has_term(const lg_dga* dga, int id, const int* letters,
                                 size_t len, int* out);
LG_API lg_status lg_dga_check_d_squared(const lg_dga* dga, int* ok);

/* Augmentations up to chain homotopy. jobs > 1 parallelizes the homotopy
 * tests; results do not depend on it. The result keeps the DGA alive. */
LG_API lg_status lg_augs_new(const lg_dga* dga, int jobs, lg_augs** out);
LG_API void lg_augs_free(lg_augs* augs);
LG_API size_t lg_augs_count(const lg_augs* augs);
LG_API size_t lg_augs_class_count(const lg_augs* augs);
/* Augmentations are sorted lexicographically; classes are ordered by their
 * least member. Bit strings hold one '0' or '1' per generator, q1 first.
 * lg_augs_classify fails with LG_ERR_DIMENSION on a wrong length and with
 * LG_ERR_PRECONDITION if the bits are not an augmentation. */
LG_API lg_status lg_augs_get(const lg_augs* augs, size_t index, char** out);
LG_API lg_status lg_augs_class_of(const lg_augs* augs, size_t index,
                                  int* class_index);
LG_API lg_status lg_augs_classify(const lg_augs* augs, const char* bits,
                                  int* class_index);

/* Graded normal rulings. nu and the total are only defined on fronts with
 * at most two left cusps; elsewhere nu is -1 and lg_rulings_total fails with
 * LG_ERR_NOT_TWO_BRIDGE. */
LG_API lg_status lg_rulings_new(const lg_front* front, lg_rulings** out);
LG_API void lg_rulings_free(lg_rulings* rulings);
LG_API size_t lg_rulings_count(const lg_rulings* rulings);
/* Switched crossing numbers, space separated. */
LG_API lg_status lg_rulings_switches(const lg_rulings* rulings, size_t index,
                                     char** out);
LG_API lg_status lg_rulings_nu(const lg_rulings* rulings, size_t index,
                               int* nu);
LG_API lg_status lg_rulings_total(const lg_rulings* rulings, long long* total);

/* Morse complex sequences, given as marked fronts. */
LG_API lg_status lg_mcs_new(const lg_front* front, lg_mcs** out);
LG_API void lg_mcs_free(lg_mcs* mcs);
LG_API lg_status lg_mcs_serialize(const lg_mcs* mcs, char** out);
/* The MCS with one mark left of every augmented crossing. */
LG_API lg_status lg_mcs_from_augmentation(const lg_augs* augs,
                                          const char* bits, lg_mcs** out);

typedef enum lg_normal_form {
  LG_FORM_SR_BAR = 0,
  LG_FORM_A = 1,
  LG_FORM_SRG = 2 /* 2-bridge fronts only */
} lg_normal_form;

/* An equivalent MCS in the requested form, with the move journal leading
 * there. `journal` may be NULL. */
LG_API lg_status lg_mcs_normal_form(const lg_mcs* mcs, lg_normal_form form,
                                    lg_mcs** out, char** journal);
LG_API lg_status lg_mcs_replay(const lg_mcs* mcs, const char* journal,
                               lg_mcs** out);
/* The augmentation read off the A-form and its class in `augs`, whose DGA
 * must belong to the MCS's underlying front. `bits` may be NULL. */
LG_API lg_status lg_mcs_psi(const lg_mcs* mcs, const lg_augs* augs,
                            char** bits, int* class_index);
/* Whether the minimal occ-simple augmentation of the MCS satisfies the
 * dipped-diagram equations. */
LG_API lg_status lg_mcs_check_dipped(const lg_mcs* mcs, int* ok);
/* Whether two MCSs on one front give homotopic dipped augmentations. With
 * no homotopy, `witness` (if not NULL) receives equations summing to 0 = 1,
 * one per line. */
LG_API lg_status lg_mcs_dipped_homotopic(const lg_mcs* a, const lg_mcs* b,
                                         int* homotopic, char** witness);

#ifdef __cplusplus
}
#endif

#endif /* LEGENDRIAN_LEGENDRIAN_H_ */
