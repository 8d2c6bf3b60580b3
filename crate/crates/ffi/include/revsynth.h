/* SPDX-License-Identifier: Apache-2.0 */

#ifndef REVSYNTH_H
#define REVSYNTH_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum RevsynthStatus {
  REVSYNTH_STATUS_OK = 0,
  REVSYNTH_STATUS_NULL_POINTER = 1,
  /**
   * Not a permutation, bad state index, or malformed argument.
   */
  REVSYNTH_STATUS_INVALID_INPUT = 2,
  /**
   * Text input did not parse.
   */
  REVSYNTH_STATUS_PARSE = 3,
  /**
   * Operands disagree on line count.
   */
  REVSYNTH_STATUS_WIDTH_MISMATCH = 4,
  /**
   * Exact search found nothing within the depth bound.
   */
  REVSYNTH_STATUS_SEARCH_EXHAUSTED = 5,
  /**
   * Width outside what the operation supports.
   */
  REVSYNTH_STATUS_UNSUPPORTED = 6,
  /**
   * Output buffer shorter than required.
   */
  REVSYNTH_STATUS_BUFFER_TOO_SMALL = 7,
  /**
   * Internal panic caught at the boundary.
   */
  REVSYNTH_STATUS_PANIC = 8,
} RevsynthStatus;

typedef enum RevsynthParity {
  REVSYNTH_PARITY_EVEN = 0,
  REVSYNTH_PARITY_ODD = 1,
} RevsynthParity;

typedef enum RevsynthGateSet {
  REVSYNTH_GATE_SET_CNTS = 0,
  REVSYNTH_GATE_SET_MCT = 1,
  REVSYNTH_GATE_SET_CNOT = 2,
} RevsynthGateSet;

/**
 * Opaque circuit handle.
 */
typedef struct RevsynthCircuit RevsynthCircuit;

/**
 * Opaque permutation handle.
 */
typedef struct RevsynthPerm RevsynthPerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL. Valid until
 * the next call into this library from the same thread.
 */
const char *revsynth_last_error(void);

/**
 * Builds a permutation from `len` 1-based images.
 */
enum RevsynthStatus revsynth_perm_from_images(const uint32_t *images,
                                              size_t len,
                                              struct RevsynthPerm **out);

/**
 * Parses a `perm <n>` file or a 0/1 matrix from NUL-terminated text.
 */
enum RevsynthStatus revsynth_perm_parse(const char *text, struct RevsynthPerm **out);

void revsynth_perm_free(struct RevsynthPerm *p);

/**
 * Number of lines, or 0 for NULL.
 */
uint32_t revsynth_perm_width(const struct RevsynthPerm *p);

/**
 * Number of basis states (`2^width`), or 0 for NULL.
 */
size_t revsynth_perm_len(const struct RevsynthPerm *p);

/**
 * Copies the 1-based images into `buf`, which must hold `len` entries.
 */
enum RevsynthStatus revsynth_perm_images(const struct RevsynthPerm *p, uint32_t *buf, size_t cap);

/**
 * Matrix product `a * b`: `b` acts first.
 */
enum RevsynthStatus revsynth_perm_compose(const struct RevsynthPerm *a,
                                          const struct RevsynthPerm *b,
                                          struct RevsynthPerm **out);

/**
 * Tensor product; `a` occupies the leading lines.
 */
enum RevsynthStatus revsynth_perm_tensor(const struct RevsynthPerm *a,
                                         const struct RevsynthPerm *b,
                                         struct RevsynthPerm **out);

enum RevsynthStatus revsynth_perm_inverse(const struct RevsynthPerm *p, struct RevsynthPerm **out);

enum RevsynthStatus revsynth_perm_parity(const struct RevsynthPerm *p, enum RevsynthParity *out);

/**
 * Image of the 1-based basis state `state`, written 1-based to `out`.
 */
enum RevsynthStatus revsynth_perm_apply(const struct RevsynthPerm *p, size_t state, size_t *out);

/**
 * Transformation-based synthesis. Always succeeds for a valid handle; the
 * circuit is lowered toward `gates` where possible.
 */
enum RevsynthStatus revsynth_synth_transform(const struct RevsynthPerm *p,
                                             enum RevsynthGateSet gates,
                                             struct RevsynthCircuit **out);

/**
 * Minimum-gate search over `gates` for at most 3 lines.
 */
enum RevsynthStatus revsynth_synth_optimal(const struct RevsynthPerm *p,
                                           enum RevsynthGateSet gates,
                                           uint32_t max_depth,
                                           struct RevsynthCircuit **out);

void revsynth_circuit_free(struct RevsynthCircuit *c);

/**
 * Gate count, or 0 for NULL.
 */
size_t revsynth_circuit_gate_count(const struct RevsynthCircuit *c);

/**
 * Line count, or 0 for NULL.
 */
uint32_t revsynth_circuit_width(const struct RevsynthCircuit *c);

/**
 * Permutation the circuit realizes.
 */
enum RevsynthStatus revsynth_circuit_permutation(const struct RevsynthCircuit *c,
                                                 struct RevsynthPerm **out);

/**
 * Circuit file text with lines named v1..vn. Free with
 * `revsynth_string_free`.
 */
enum RevsynthStatus revsynth_circuit_emit(const struct RevsynthCircuit *c, char **out);

enum RevsynthStatus revsynth_circuit_parse(const char *text, struct RevsynthCircuit **out);

/**
 * Writes whether `c` realizes `p`. Differing line counts are an error.
 */
enum RevsynthStatus revsynth_circuit_verify(const struct RevsynthCircuit *c,
                                            const struct RevsynthPerm *p,
                                            bool *out);

void revsynth_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* REVSYNTH_H */
