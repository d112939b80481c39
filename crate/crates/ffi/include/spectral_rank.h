#ifndef SPECTRAL_RANK_H
#define SPECTRAL_RANK_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes for every fallible entry point.
 */
typedef enum SrStatus {
  /**
   * Success; outputs are valid.
   */
  SrStatusOk = 0,
  /**
   * A required pointer argument was null.
   */
  SrStatusNullArgument = 1,
  /**
   * A string argument was not valid UTF-8.
   */
  SrStatusInvalidUtf8 = 2,
  /**
   * The input was syntactically or semantically invalid.
   */
  SrStatusInvalidInput = 3,
  /**
   * A numeric computation failed (non-convergence, internal error).
   */
  SrStatusComputationFailed = 4,
  /**
   * A panic was caught at the boundary.
   */
  SrStatusPanic = 5,
} SrStatus;

/**
 * Opaque graph handle.
 */
typedef struct SrGraph SrGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *sr_tool_version(void);

/**
 * Static description of a status code; do not free.
 */
const char *sr_status_message(enum SrStatus status);

/**
 * Most recent error message on this thread, or null if none. The caller
 * owns the returned string and must release it with `sr_string_free`.
 */
char *sr_last_error_message(void);

/**
 * Release a string returned by this library.
 *
 * # Safety
 * `text` must be a pointer previously returned by a function in this
 * library that transfers string ownership, or null.
 */
void sr_string_free(char *text);

/**
 * Parse a graph6 string into a new graph handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated C string; `out` must be a valid
 * pointer to receive the handle.
 */
enum SrStatus sr_graph_from_graph6(const char *text, struct SrGraph **out);

/**
 * Parse any supported graph description: a graph6 string, a family spec
 * `"BASE:n1,n2,..."` (e.g. `"G1:1,1,1,1,4"`), or a catalog id (`"K3"`,
 * `"G10"`).
 *
 * # Safety
 * `text` must be a valid NUL-terminated C string; `out` must be a valid
 * pointer to receive the handle.
 */
enum SrStatus sr_graph_parse(const char *text, struct SrGraph **out);

/**
 * The minimum-spectral-radius connected graph of order `n` and adjacency
 * rank 5 (defined for n >= 5).
 *
 * # Safety
 * `out` must be a valid pointer to receive the handle.
 */
enum SrStatus sr_min_rank5_extremal(uintptr_t n, struct SrGraph **out);

/**
 * Release a graph handle.
 *
 * # Safety
 * `graph` must be a handle returned by this library, or null; it must not
 * be used afterwards.
 */
void sr_graph_free(struct SrGraph *graph);

/**
 * Number of vertices.
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_order(const struct SrGraph *graph, uintptr_t *out);

/**
 * Number of edges.
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_edge_count(const struct SrGraph *graph, uintptr_t *out);

/**
 * Rank of the adjacency matrix over the rationals (exact).
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_rank(const struct SrGraph *graph, uintptr_t *out);

/**
 * Whether the graph is connected (true for the one-vertex graph).
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_is_connected(const struct SrGraph *graph, bool *out);

/**
 * Spectral radius by power iteration on A + I (connected graphs only).
 * `tol` <= 0 selects the default tolerance 1e-12.
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_spectral_radius(const struct SrGraph *graph, double tol, double *out);

/**
 * Spectral radius as the largest real root of the exact characteristic
 * polynomial (works for disconnected graphs too).
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_charpoly_radius(const struct SrGraph *graph, double *out);

/**
 * Characteristic polynomial of the adjacency matrix as a JSON array of
 * decimal coefficient strings, constant term first. Caller frees with
 * `sr_string_free`.
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_charpoly_json(const struct SrGraph *graph, char **out);

/**
 * Canonical graph6 encoding. Caller frees with `sr_string_free`.
 *
 * # Safety
 * `graph` must be a live handle from this library; `out` must be valid.
 */
enum SrStatus sr_graph_to_graph6(const struct SrGraph *graph, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* SPECTRAL_RANK_H */
