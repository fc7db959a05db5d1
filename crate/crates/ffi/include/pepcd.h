/* pepcd C API: proportional-edge proximity catch digraphs. */

#ifndef PEPCD_H
#define PEPCD_H

/* Generated by cbindgen from pepcd-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Statistic families for density and domination queries.
typedef enum PepcdKind {
  PEPCD_KIND_ARC = 0,
  PEPCD_KIND_AND = 1,
  PEPCD_KIND_OR = 2,
} PepcdKind;

// Status codes returned by every fallible entry point.
typedef enum PepcdStatus {
  PEPCD_STATUS_OK = 0,
  // Null pointer, bad kind value, or argument outside its domain.
  PEPCD_STATUS_INVALID_ARGUMENT = 1,
  // Geometry that cannot support the construction.
  PEPCD_STATUS_DEGENERATE_INPUT = 2,
  // A point outside the required domain.
  PEPCD_STATUS_OUTSIDE_DOMAIN = 3,
  PEPCD_STATUS_TOO_FEW_VERTICES = 4,
  // Parameters at which the asymptotic distribution degenerates.
  PEPCD_STATUS_DEGENERATE_LIMIT = 5,
  PEPCD_STATUS_INTERNAL = 6,
} PepcdStatus;

// An opaque built PCD: instance plus its arc matrix.
typedef struct PepcdPcd PepcdPcd;

// Result of the CSR test, all fields populated on `Ok`.
typedef struct PepcdCsrResult {
  double observed;
  double null_mean;
  double null_variance;
  double z;
  double p_lower;
  double p_upper;
  double p_two_sided;
  // Retained sample size.
  size_t n;
  // Anchor count.
  size_t m;
  // Points dropped as outside the hull.
  size_t excluded;
} PepcdCsrResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static NUL-terminated string.
const char *pepcd_version(void);

// Static description of a status code.
const char *pepcd_status_message(enum PepcdStatus status);

// Message of the most recent failure on this thread; valid until the next
// failing call on the same thread.
const char *pepcd_last_error(void);

// Asymptotic edge probability p(r) of the AND (1) or OR (2) graph.
//
// # Safety
// `out` must be writable.
enum PepcdStatus pepcd_mean(int kind, double r, double *out);

// Kernel variance Var[h12(r)].
//
// # Safety
// `out` must be writable.
enum PepcdStatus pepcd_kernel_variance(int kind, double r, double *out);

// Kernel covariance nu(r) = Cov[h12(r), h13(r)].
//
// # Safety
// `out` must be writable.
enum PepcdStatus pepcd_kernel_covariance(int kind, double r, double *out);

// Normal-approximation parameters of the relative edge density:
// mean p(r) and variance 4 nu(r) / n.
//
// # Safety
// Out pointers must be writable.
enum PepcdStatus pepcd_normal_params(int kind,
                                     size_t n,
                                     double r,
                                     double *out_mean,
                                     double *out_variance);

// Build a PCD from interleaved xy coordinates: `x_xy` holds n (x, y) pairs,
// `y_xy` holds m anchor pairs (3 anchors for a single triangle, more for a
// Delaunay triangulation). With `drop_outside` false, a sample point outside
// the hull fails the build.
//
// # Safety
// `x_xy` and `y_xy` must point to `2n` and `2m` readable doubles; the result
// must be freed with [`pepcd_pcd_free`].
enum PepcdStatus pepcd_pcd_build(const double *x_xy,
                                 size_t n,
                                 const double *y_xy,
                                 size_t m,
                                 double r,
                                 bool drop_outside,
                                 struct PepcdPcd **out);

// Free a handle built by [`pepcd_pcd_build`]; null is a no-op.
//
// # Safety
// `pcd` must be a pointer from [`pepcd_pcd_build`] not yet freed.
void pepcd_pcd_free(struct PepcdPcd *pcd);

// Number of retained sample points.
//
// # Safety
// `pcd` must be a live handle.
size_t pepcd_pcd_sample_size(const struct PepcdPcd *pcd);

// Number of sample points dropped as outside the hull.
//
// # Safety
// `pcd` must be a live handle.
size_t pepcd_pcd_excluded(const struct PepcdPcd *pcd);

// Number of arcs in the digraph.
//
// # Safety
// `pcd` must be a live handle.
uint64_t pepcd_pcd_arc_count(const struct PepcdPcd *pcd);

// Relative density of the requested statistic: arc density for kind 0, edge
// density of the reflexivity (1) or underlying (2) graph.
//
// # Safety
// `pcd` must be a live handle; `out` must be writable.
enum PepcdStatus pepcd_pcd_density(const struct PepcdPcd *pcd, int kind, double *out);

// Domination number of the digraph (kind 0) or derived graph (1, 2); exact
// by exhaustive search up to `max_exact`, otherwise the greedy bound with
// `out_exact` false.
//
// # Safety
// `pcd` must be a live handle; out pointers must be writable.
enum PepcdStatus pepcd_pcd_domination(const struct PepcdPcd *pcd,
                                      int kind,
                                      size_t max_exact,
                                      size_t *out_value,
                                      bool *out_exact);

// Complete-spatial-randomness test of the sample against the anchors using
// the version-I edge density of the AND (1) or OR (2) graph.
//
// # Safety
// `x_xy`/`y_xy` as in [`pepcd_pcd_build`]; `out` must be writable.
enum PepcdStatus pepcd_csr_test(const double *x_xy,
                                size_t n,
                                const double *y_xy,
                                size_t m,
                                double r,
                                int kind,
                                struct PepcdCsrResult *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* PEPCD_H */
