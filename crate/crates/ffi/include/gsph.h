#ifndef GSPH_H
#define GSPH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/**
 * Result code of every fallible call.
 */
typedef enum GsphStatus {
  GSPH_STATUS_OK = 0,
  GSPH_STATUS_NULL_POINTER = 1,
  GSPH_STATUS_INVALID_UTF8 = 2,
  GSPH_STATUS_INVALID_ARGUMENT = 3,
  GSPH_STATUS_INVALID_FIELD = 4,
  GSPH_STATUS_OUT_OF_RANGE = 5,
  GSPH_STATUS_PARSE_ERROR = 6,
  GSPH_STATUS_COMPUTATION_FAILED = 7,
  GSPH_STATUS_PANIC = 8,
} GsphStatus;

typedef enum GsphKind {
  GSPH_KIND_ORDINARY = 0,
  GSPH_KIND_RELATIVE = 1,
  GSPH_KIND_EXTENDED = 2,
} GsphKind;

typedef struct GsphDiagram GsphDiagram;

typedef struct GsphDigraph GsphDigraph;

typedef struct GsphHypergraph GsphHypergraph;

/**
 * Computation settings; start from [`gsph_options_default`].
 */
typedef struct GsphOptions {
  /**
   * Highest homology dimension.
   */
  size_t pmax;
  /**
   * Prime modulus of the coefficient field.
   */
  uint32_t field;
  /**
   * Skip columns already known to reduce to zero.
   */
  bool clearing;
} GsphOptions;

typedef struct GsphPoint {
  size_t dim;
  enum GsphKind kind;
  double birth;
  double death;
} GsphPoint;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or an empty string.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *gsph_last_error(void);

/**
 * Library version as a static string.
 */
const char *gsph_version(void);

struct GsphOptions gsph_options_default(void);

struct GsphDigraph *gsph_digraph_new(void);

/**
 * # Safety
 * `graph` is null or was returned by [`gsph_digraph_new`] and not yet freed.
 */
void gsph_digraph_free(struct GsphDigraph *graph);

/**
 * # Safety
 * `graph` is a live digraph handle and `name` a NUL-terminated string.
 */
enum GsphStatus gsph_digraph_add_vertex(struct GsphDigraph *graph, const char *name);

/**
 * # Safety
 * `graph` is a live digraph handle; `source` and `target` are NUL-terminated strings.
 */
enum GsphStatus gsph_digraph_add_edge(struct GsphDigraph *graph,
                                      const char *source,
                                      const char *target,
                                      double weight);

/**
 * Extended persistence diagram of the digraph's path homology.
 * `options` may be null for the defaults. On success `*out` owns a new diagram.
 *
 * # Safety
 * `graph` is a live digraph handle, `options` is null or valid, `out` is writable.
 */
enum GsphStatus gsph_digraph_diagram(const struct GsphDigraph *graph,
                                     const struct GsphOptions *options,
                                     struct GsphDiagram **out);

struct GsphHypergraph *gsph_hypergraph_new(void);

/**
 * # Safety
 * `graph` is null or was returned by [`gsph_hypergraph_new`] and not yet freed.
 */
void gsph_hypergraph_free(struct GsphHypergraph *graph);

/**
 * Add the hyperedge on `count` named vertices with value `value`.
 *
 * # Safety
 * `graph` is a live hypergraph handle and `vertices` points to `count`
 * NUL-terminated strings.
 */
enum GsphStatus gsph_hypergraph_add_hyperedge(struct GsphHypergraph *graph,
                                              const char *const *vertices,
                                              size_t count,
                                              double value);

/**
 * Extended persistence diagram of the hypergraph's embedded homology.
 *
 * # Safety
 * As for [`gsph_digraph_diagram`].
 */
enum GsphStatus gsph_hypergraph_diagram(const struct GsphHypergraph *graph,
                                        const struct GsphOptions *options,
                                        struct GsphDiagram **out);

/**
 * Parse a diagram in the tab-separated text format.
 *
 * # Safety
 * `source` is a NUL-terminated string and `out` is writable.
 */
enum GsphStatus gsph_diagram_parse(const char *source, struct GsphDiagram **out);

/**
 * Tab-separated text of the diagram. Free the result with [`gsph_string_free`].
 *
 * # Safety
 * `diagram` is a live diagram handle and `out` is writable.
 */
enum GsphStatus gsph_diagram_format(const struct GsphDiagram *diagram, char **out);

/**
 * # Safety
 * `s` is null or was returned by [`gsph_diagram_format`] and not yet freed.
 */
void gsph_string_free(char *s);

/**
 * # Safety
 * `diagram` is null or a diagram handle not yet freed.
 */
void gsph_diagram_free(struct GsphDiagram *diagram);

/**
 * Number of points; zero for a null handle.
 *
 * # Safety
 * `diagram` is null or a live diagram handle.
 */
size_t gsph_diagram_len(const struct GsphDiagram *diagram);

/**
 * Copy point `index` (in dimension, kind, birth, death order) into `*out`.
 *
 * # Safety
 * `diagram` is a live diagram handle and `out` is writable.
 */
enum GsphStatus gsph_diagram_point(const struct GsphDiagram *diagram,
                                   size_t index,
                                   struct GsphPoint *out);

/**
 * Bottleneck distance in dimension `dim`; `*out` is `INFINITY` when the
 * extended parts have different sizes.
 *
 * # Safety
 * `left` and `right` are live diagram handles and `out` is writable.
 */
enum GsphStatus gsph_bottleneck(const struct GsphDiagram *left,
                                const struct GsphDiagram *right,
                                size_t dim,
                                double *out);

/**
 * Build a diagram from `count` points.
 *
 * # Safety
 * `points` points to `count` readable values, each with a valid `kind`,
 * and `out` is writable.
 */
enum GsphStatus gsph_diagram_from_points(const struct GsphPoint *points,
                                         size_t count,
                                         struct GsphDiagram **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GSPH_H */
