/* C interface to ramsey-forge. Generated by cbindgen; do not edit. */

#ifndef RAMSEY_FORGE_H
#define RAMSEY_FORGE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Search strategy selector for [`rf_search_json`].
 */
typedef enum {
  /**
   * Score every host of the given order; exact but capped.
   */
  RfSearchMode_Exhaustive = 0,
  /**
   * Steepest-descent with seeded restarts; an upper bound.
   */
  RfSearchMode_Local = 1,
} RfSearchMode;

/**
 * Result of every fallible call. Values above `Ok` match the command-line
 * tool's exit codes where one exists.
 */
typedef enum {
  /**
   * Success.
   */
  RfStatus_Ok = 0,
  /**
   * A required pointer argument was null.
   */
  RfStatus_NullArgument = 1,
  /**
   * Malformed graph text, rational, or other unparseable input.
   */
  RfStatus_ParseError = 2,
  /**
   * Structurally invalid input (order out of range, edgeless pattern, ...).
   */
  RfStatus_InvalidArgument = 3,
  /**
   * The host graph is smaller than the patterns require.
   */
  RfStatus_SizeError = 4,
  /**
   * The requested exhaustive search exceeds the vertex cap.
   */
  RfStatus_BudgetExceeded = 5,
  /**
   * An internal panic was caught at the boundary.
   */
  RfStatus_Panic = 6,
} RfStatus;

/**
 * Opaque graph handle.
 */
typedef struct RfGraph RfGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses graph text (graph6, or a 0-indexed `u v` edge list) into a new
 * handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer;
 * `*out` receives either an owned handle (release with [`rf_graph_free`])
 * or null.
 */
RfStatus rf_graph_parse(const char *text, RfGraph **out);

/**
 * Releases a handle returned by this library. Null is a no-op.
 *
 * # Safety
 * `g` must be null or an owned handle not freed before.
 */
void rf_graph_free(RfGraph *g);

/**
 * Releases a string written by this library. Null is a no-op.
 *
 * # Safety
 * `s` must be null or a string this library wrote, not freed before.
 */
void rf_string_free(char *s);

/**
 * Writes the graph's graph6 encoding.
 *
 * # Safety
 * `g` must be a live handle; `*out` receives an owned string (release with
 * [`rf_string_free`]) or null.
 */
RfStatus rf_graph_write_g6(const RfGraph *g, char **out);

/**
 * Builds the complement as a new handle.
 *
 * # Safety
 * `g` must be a live handle; `*out` receives an owned handle or null.
 */
RfStatus rf_graph_complement(const RfGraph *g, RfGraph **out);

/**
 * Writes the number of vertices.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
RfStatus rf_graph_order(const RfGraph *g, uint32_t *out);

/**
 * Writes the number of edges.
 *
 * # Safety
 * `g` must be a live handle and `out` a valid pointer.
 */
RfStatus rf_graph_edge_count(const RfGraph *g, uint32_t *out);

/**
 * Evaluates the two-pattern objective of `h1`, `h2` on the host `g` and
 * writes the same JSON document the command-line tool prints.
 *
 * # Safety
 * All handles must be live; `*out` receives an owned string or null.
 */
RfStatus rf_objective_json(const RfGraph *h1, const RfGraph *h2, const RfGraph *g, char **out);

/**
 * Minimizes the objective over all hosts of order `n` and writes the JSON
 * report. `seed` only matters in local mode; `max_n` raises the exhaustive
 * cap (hard limit 8); `jobs` bounds parallelism, 0 meaning the ambient
 * pool, and never changes the result.
 *
 * # Safety
 * `h1`/`h2` must be live handles; `*out` receives an owned string or null.
 */
RfStatus rf_search_json(const RfGraph *h1,
                        const RfGraph *h2,
                        uint32_t n,
                        RfSearchMode mode,
                        uint64_t seed,
                        uint32_t max_n,
                        uint32_t jobs,
                        char **out);

/**
 * Sweeps the exact expected objective of the random clique-deletion
 * construction over an epsilon grid and writes the JSON report. `grid` is
 * a comma-separated list of rationals in [0, 1]; null selects the default
 * 0, 1/100, ..., 1/10.
 *
 * # Safety
 * `h1`/`h2` must be live handles; `grid` null or NUL-terminated; `*out`
 * receives an owned string or null.
 */
RfStatus rf_perturb_json(const RfGraph *h1,
                         const RfGraph *h2,
                         uint32_t n,
                         const char *grid,
                         uint32_t jobs,
                         char **out);

/**
 * Writes the colouring counts and closed-form bounds for one pattern as
 * JSON. The nearly-proper fields are present only when the chromatic
 * number is at least 3.
 *
 * # Safety
 * `h` must be a live handle; `*out` receives an owned string or null.
 */
RfStatus rf_bounds_json(const RfGraph *h, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* RAMSEY_FORGE_H */
