#ifndef CHROMSYM_H
#define CHROMSYM_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChromsymStatus {
  CHROMSYM_STATUS_OK = 0,
  CHROMSYM_STATUS_NULL_POINTER = 1,
  CHROMSYM_STATUS_INVALID_UTF8 = 2,
  CHROMSYM_STATUS_PARSE = 3,
  CHROMSYM_STATUS_SIZE_MISMATCH = 4,
  CHROMSYM_STATUS_INVALID_ARGUMENT = 5,
  CHROMSYM_STATUS_NOT_SYMMETRIC = 6,
  CHROMSYM_STATUS_LIMIT_EXCEEDED = 7,
  CHROMSYM_STATUS_OTHER = 8,
  CHROMSYM_STATUS_PANIC = 9,
} ChromsymStatus;

typedef struct ChromsymGraph ChromsymGraph;

typedef struct ChromsymMatrix ChromsymMatrix;

typedef struct ChromsymNetwork ChromsymNetwork;

typedef struct ChromsymPoset ChromsymPoset;

typedef struct ChromsymSymFunc ChromsymSymFunc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the next call.
 */
const char *chromsym_last_error(void);

/**
 * Library version as a static string.
 */
const char *chromsym_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void chromsym_string_free(char *s);

/**
 * Parse `{"n": .., "relations": [[a, b], ..]}`.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_poset_from_json(const char *json, struct ChromsymPoset **out);

/**
 * # Safety
 * `p` must be null or a handle from this library.
 */
void chromsym_poset_free(struct ChromsymPoset *p);

/**
 * # Safety
 * `p` must be a valid poset handle and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_poset_incomparability_graph(const struct ChromsymPoset *p,
                                                         struct ChromsymGraph **out);

/**
 * Number of P-tableaux of shape `lambda` (e.g. `"3,2"`) satisfying `predicate` (e.g. `"standard-and-cyclic"`).
 *
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_poset_count_tableaux(const struct ChromsymPoset *p,
                                                  const char *lambda,
                                                  const char *predicate,
                                                  uint64_t *out);

/**
 * Parse `{"n": .., "edges": [[a, b], ..]}`.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_graph_from_json(const char *json, struct ChromsymGraph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library.
 */
void chromsym_graph_free(struct ChromsymGraph *g);

/**
 * `X_G` in the monomial basis.
 *
 * # Safety
 * `g` must be a valid graph handle and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_graph_chromatic(const struct ChromsymGraph *g,
                                             struct ChromsymSymFunc **out);

/**
 * `θ^λ(G)` for a trace basis name (`epsilon`, `eta`, `chi`, `psi`, `phi`, `gamma`), as an exact string.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_graph_trace(const struct ChromsymGraph *g,
                                         const char *basis,
                                         const char *lambda,
                                         char **out);

/**
 * # Safety
 * `f` must be null or a handle from this library.
 */
void chromsym_symfunc_free(struct ChromsymSymFunc *f);

/**
 * Re-express in the basis named by one letter of `m e h p s f`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_symfunc_convert(const struct ChromsymSymFunc *f,
                                             const char *basis,
                                             struct ChromsymSymFunc **out);

/**
 * Coefficient of the basis element indexed by `lambda`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_symfunc_coeff(const struct ChromsymSymFunc *f,
                                           const char *lambda,
                                           char **out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_symfunc_to_json(const struct ChromsymSymFunc *f, char **out);

/**
 * Parse a matrix given as a JSON array of rows.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_matrix_from_json(const char *json, struct ChromsymMatrix **out);

/**
 * Parse a comma or whitespace separated matrix.
 *
 * # Safety
 * `csv` must be a valid C string and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_matrix_from_csv(const char *csv, struct ChromsymMatrix **out);

/**
 * # Safety
 * `m` must be null or a handle from this library.
 */
void chromsym_matrix_free(struct ChromsymMatrix *m);

/**
 * # Safety
 * `m` must be a valid matrix handle.
 */
size_t chromsym_matrix_order(const struct ChromsymMatrix *m);

/**
 * `Imm_θ(A)` for `θ = basis^lambda`.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_matrix_immanant(const struct ChromsymMatrix *m,
                                             const char *basis,
                                             const char *lambda,
                                             char **out);

/**
 * 0 if some minor is negative, 1 if all minors are nonnegative.
 *
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_matrix_is_tnn(const struct ChromsymMatrix *m, int32_t *out);

/**
 * # Safety
 * Pointers must be valid.
 */
enum ChromsymStatus chromsym_matrix_to_json(const struct ChromsymMatrix *m, char **out);

/**
 * Parse a planar network document.
 *
 * # Safety
 * `json` must be a valid C string and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_network_from_json(const char *json, struct ChromsymNetwork **out);

/**
 * # Safety
 * `d` must be null or a handle from this library.
 */
void chromsym_network_free(struct ChromsymNetwork *d);

/**
 * # Safety
 * `d` must be a valid network handle and `out` a valid pointer.
 */
enum ChromsymStatus chromsym_network_path_matrix(const struct ChromsymNetwork *d,
                                                 struct ChromsymMatrix **out);

/**
 * Run a verification suite. `n == 0` selects the suite default. The JSON
 * report is written to `report` when it is not null; `passed` receives 1 or 0.
 *
 * # Safety
 * `suite` must be a valid C string; `passed` must be valid; `report` may be null.
 */
enum ChromsymStatus chromsym_verify(const char *suite,
                                    size_t n,
                                    size_t trials,
                                    uint64_t seed,
                                    int32_t *passed,
                                    char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHROMSYM_H */
