#ifndef FEASREG_H
#define FEASREG_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FeasregSense {
  FEASREG_SENSE_MAX = 0,
  FEASREG_SENSE_MIN = 1,
} FeasregSense;

typedef enum FeasregStatus {
  FEASREG_STATUS_OK = 0,
  FEASREG_STATUS_NULL_POINTER = 1,
  FEASREG_STATUS_INVALID_UTF8 = 2,
  FEASREG_STATUS_PARSE = 3,
  FEASREG_STATUS_DOMAIN = 4,
  FEASREG_STATUS_CAPABILITY = 5,
  FEASREG_STATUS_CONSTRUCTION = 6,
  // An output buffer is too small; the required length is still written.
  FEASREG_STATUS_BUFFER_TOO_SMALL = 7,
  FEASREG_STATUS_INTERNAL = 8,
} FeasregStatus;

// Opaque simple graph.
typedef struct FeasregGraph FeasregGraph;

// Opaque quantum graph.
typedef struct FeasregQuantum FeasregQuantum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failure on this thread; empty after a success. The
// pointer stays valid until the next library call on this thread.
const char *feasreg_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void feasreg_string_free(char *s);

// Parses graph6 into a new handle.
//
// # Safety
// `g6` must be a NUL-terminated string and `out` a valid pointer.
enum FeasregStatus feasreg_graph_from_graph6(const char *g6, struct FeasregGraph **out);

// Builds `h-star`, `bipartite-b`, `clique-isolated`, `coclique-joined`
// (using `x`) or `turan` (using `r`) on `n` vertices.
//
// # Safety
// `kind` must be a NUL-terminated string and `out` a valid pointer.
enum FeasregStatus feasreg_construct(const char *kind,
                                     size_t n,
                                     double x,
                                     size_t r,
                                     struct FeasregGraph **out);

// # Safety
// `g` must be null or a handle from this library not yet freed.
void feasreg_graph_free(struct FeasregGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t feasreg_graph_order(const struct FeasregGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t feasreg_graph_edge_count(const struct FeasregGraph *g);

// graph6 encoding; free the result with [`feasreg_string_free`].
//
// # Safety
// `g` must be a live handle and `out` a valid pointer.
enum FeasregStatus feasreg_graph_to_graph6(const struct FeasregGraph *g, char **out);

// Parses a quantum graph such as `"K3 + E3"` or `"2*g6:Bw + -0.5*C4"`.
//
// # Safety
// `spec` must be a NUL-terminated string and `out` a valid pointer.
enum FeasregStatus feasreg_quantum_parse(const char *spec, struct FeasregQuantum **out);

// # Safety
// `q` must be null or a handle from this library not yet freed.
void feasreg_quantum_free(struct FeasregQuantum *q);

// Induced density `ρ(Q, G)`.
//
// # Safety
// `q` and `g` must be live handles and `out` a valid pointer.
enum FeasregStatus feasreg_quantum_density(const struct FeasregQuantum *q,
                                           const struct FeasregGraph *g,
                                           double *out);

// Expected density in the random graph of edge density `x`.
//
// # Safety
// `q` must be a live handle and `out` a valid pointer.
enum FeasregStatus feasreg_quantum_rand_density(const struct FeasregQuantum *q,
                                                double x,
                                                double *out);

// Evaluates a named boundary curve (`k3minus`, `g3`, `h4`, `goodman-lower`,
// `c4-large`, ...) at `x`.
//
// # Safety
// `name` must be a NUL-terminated string and `out` a valid pointer.
enum FeasregStatus feasreg_curve_eval(const char *name, double x, double *out);

// Exact inducibility of `K_t^-` as `numerator / denominator`; capability
// error if either does not fit in 64 bits.
//
// # Safety
// `numerator` and `denominator` must be valid pointers.
enum FeasregStatus feasreg_ind_kt_minus(size_t t, uint64_t *numerator, uint64_t *denominator);

// Optimises the limit density of `q` over complete multipartite profiles
// with at most `r` parts at edge density `x`. Writes the optimum to
// `value`, the number of parts to `parts`, and the part fractions (in
// decreasing order) to `profile` when `capacity` suffices.
//
// # Safety
// `q` must be a live handle; `value` and `parts` valid pointers; `profile`
// null or valid for `capacity` writes.
enum FeasregStatus feasreg_optimize_profile(const struct FeasregQuantum *q,
                                            size_t r,
                                            double x,
                                            enum FeasregSense sense,
                                            uint64_t seed,
                                            double *value,
                                            double *profile,
                                            size_t capacity,
                                            size_t *parts);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FEASREG_H */
