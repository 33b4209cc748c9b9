#ifndef CHORN_H
#define CHORN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChornStatus {
  CHORN_STATUS_OK = 0,
  /**
   * Null pointer, bad UTF-8, or an argument out of range.
   */
  CHORN_STATUS_INVALID_ARGUMENT = 1,
  /**
   * A graph spec or number failed to parse.
   */
  CHORN_STATUS_PARSE = 2,
  /**
   * Mathematically invalid input, such as a non-chordal graph where one is required.
   */
  CHORN_STATUS_INPUT = 3,
  /**
   * A size guard or truncation bound was exceeded.
   */
  CHORN_STATUS_RESOURCE_LIMIT = 4,
  /**
   * The caller's buffer is too small; the required length was written.
   */
  CHORN_STATUS_BUFFER_TOO_SMALL = 5,
  /**
   * A bug inside the library; the handle arguments are left untouched.
   */
  CHORN_STATUS_PANIC = 6,
} ChornStatus;

/**
 * Opaque graph handle.
 */
typedef struct ChornGraph ChornGraph;

/**
 * Opaque truncated power series handle.
 */
typedef struct ChornSeries ChornSeries;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * The message for the last failed call on this thread, or "" after a
 * success. Owned by the library and valid until the next call on this thread.
 */
const char *chorn_last_error_message(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void chorn_string_free(char *s);

/**
 * Parses a finite graph spec: `P:n`, `C:n`, `S:n`, `K:n` or `file:<path>`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum ChornStatus chorn_graph_parse(const char *spec, struct ChornGraph **out);

/**
 * The induced subgraph of any family, including `Pinf` and `Sinf`, on `window`.
 *
 * # Safety
 * `spec` must be NUL-terminated; `window` must hold `len` labels; `out` must be writable.
 */
enum ChornStatus chorn_graph_parse_window(const char *spec,
                                          const uint32_t *window,
                                          size_t len,
                                          struct ChornGraph **out);

/**
 * A graph on `1..=n` with `edge_count` edges given as consecutive label pairs.
 *
 * # Safety
 * `edges` must hold `2 * edge_count` labels; `out` must be writable.
 */
enum ChornStatus chorn_graph_from_edges(size_t n,
                                        const uint32_t *edges,
                                        size_t edge_count,
                                        struct ChornGraph **out);

/**
 * # Safety
 * `g` must come from this library and not have been freed. Null is ignored.
 */
void chorn_graph_free(struct ChornGraph *g);

/**
 * Number of vertices, 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a live handle.
 */
size_t chorn_graph_vertex_count(const struct ChornGraph *g);

/**
 * Writes a perfect elimination ordering into `order`. `*len` is the
 * capacity on entry and the vertex count on return; fails with
 * `CHORN_STATUS_INPUT` for non-chordal graphs.
 *
 * # Safety
 * `g` must be live; `order` must have room for `*len` labels.
 */
enum ChornStatus chorn_find_peo(const struct ChornGraph *g, uint32_t *order, size_t *len);

/**
 * `I(G, x)^q` truncated at total degree `degree_bound`.
 *
 * # Safety
 * `g` must be live; `out` must be writable.
 */
enum ChornStatus chorn_series_power(const struct ChornGraph *g,
                                    int64_t q,
                                    uint32_t degree_bound,
                                    struct ChornSeries **out);

/**
 * # Safety
 * `s` must come from this library and not have been freed. Null is ignored.
 */
void chorn_series_free(struct ChornSeries *s);

/**
 * The coefficient of `x^m` as a `"p/q"` string, where `m` is dense over the
 * graph's labels. Pass the same graph the series was built from.
 *
 * # Safety
 * Handles must be live; `exps` must hold `len` entries; `out` must be writable.
 */
enum ChornStatus chorn_series_coefficient(const struct ChornSeries *s,
                                          const struct ChornGraph *g,
                                          const uint32_t *exps,
                                          size_t len,
                                          char **out);

/**
 * `pi^m_G(q)` as JSON: `{"coeffs": [...], "text": "..."}`, coefficients ascending.
 *
 * # Safety
 * `g` must be live; `exps` must hold `len` entries; `out` must be writable.
 */
enum ChornStatus chorn_chromatic_polynomial(const struct ChornGraph *g,
                                            const uint32_t *exps,
                                            size_t len,
                                            char **out);

/**
 * The bounded Horn verdict for `I(G, x)^{-q}` over all vertices, as JSON.
 *
 * # Safety
 * `g` must be live; `out` must be writable.
 */
enum ChornStatus chorn_horn_verdict(const struct ChornGraph *g,
                                    int64_t q,
                                    uint32_t degree_bound,
                                    uint32_t cap_numerator,
                                    uint32_t cap_denominator,
                                    char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHORN_H */
