/* C interface to the esg edge-signed graph classification library. */

#ifndef ESG_H
#define ESG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every C entry point.
typedef enum EsgStatus {
  // The call succeeded.
  ESG_STATUS_OK = 0,
  // A required pointer argument was null.
  ESG_STATUS_NULL_ARGUMENT = 1,
  // A string argument was not valid UTF-8.
  ESG_STATUS_INVALID_UTF8 = 2,
  // The graph text did not parse.
  ESG_STATUS_PARSE_ERROR = 3,
  // The graph violates a size bound of the requested operation.
  ESG_STATUS_UNSUPPORTED = 4,
  // The graph violates a precondition (connectivity or the
  // smallest-eigenvalue bound) of the requested operation.
  ESG_STATUS_PRECONDITION = 5,
  // The operation panicked; this indicates a library bug.
  ESG_STATUS_INTERNAL = 6,
} EsgStatus;

// Opaque handle to an edge-signed graph.
typedef struct EsgGraph EsgGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message describing the most recent failure on this thread. The pointer
// stays valid until the next failing call on the same thread; never free
// it.
const char *esg_last_error(void);

// Parse graph text ("vertices N" then "edge U V SIGN" lines) into a new
// handle. On success `*out` owns the graph; release it with
// `esg_graph_free`.
//
// # Safety
// `text` must point to a nul-terminated string and `out` to writable
// pointer storage.
enum EsgStatus esg_graph_parse(const char *text, struct EsgGraph **out);

// Release a handle returned by `esg_graph_parse`. Null is ignored.
//
// # Safety
// `g` must be null or a pointer previously returned by
// `esg_graph_parse` that has not been freed.
void esg_graph_free(struct EsgGraph *g);

// Number of vertices, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t esg_graph_vertex_count(const struct EsgGraph *g);

// Canonical switching-class key as a hex string; equal strings mean
// switching-equivalent graphs. Release `*out` with `esg_string_free`.
//
// # Safety
// `g` must be a live handle and `out` writable pointer storage.
enum EsgStatus esg_graph_canonical_key(const struct EsgGraph *g, char **out);

// Decide switching equivalence of two graphs, writing the verdict to
// `*out`.
//
// # Safety
// `a` and `b` must be live handles and `out` writable bool storage.
enum EsgStatus esg_graph_equivalent(const struct EsgGraph *a, const struct EsgGraph *b, bool *out);

// Characteristic polynomial, certified smallest-eigenvalue interval, and
// the exact trichotomy against -2, as a JSON document. Release `*out`
// with `esg_string_free`.
//
// # Safety
// `g` must be a live handle and `out` writable pointer storage.
enum EsgStatus esg_graph_spectra_json(const struct EsgGraph *g, char **out);

// Structural classification (tree line graph, odd-unicyclic line graph,
// doubled-edge extension, or exceptional) with representation matrix and
// switching certificate, as a JSON document. Requires a connected graph
// with smallest eigenvalue above -2. Release `*out` with
// `esg_string_free`.
//
// # Safety
// `g` must be a live handle and `out` writable pointer storage.
enum EsgStatus esg_graph_classify_json(const struct EsgGraph *g, char **out);

// Release a string returned by this library. Null is ignored.
//
// # Safety
// `s` must be null or a string pointer returned by this library that has
// not been freed.
void esg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ESG_H */
