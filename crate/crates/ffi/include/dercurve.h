#ifndef DERCURVE_H
#define DERCURVE_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DcDerKind {
  DC_DER_KIND_EULER_U = 0,
  DC_DER_KIND_EULER_V = 1,
  DC_DER_KIND_D1 = 2,
  DC_DER_KIND_D1_DEGENERATE = 3,
  DC_DER_KIND_D2 = 4,
  DC_DER_KIND_D2_DEGENERATE = 5,
} DcDerKind;

/**
 * Result code of every fallible call.
 */
typedef enum DcStatus {
  DC_STATUS_OK = 0,
  DC_STATUS_NULL_POINTER = 1,
  DC_STATUS_BUFFER_TOO_SMALL = 2,
  DC_STATUS_INVALID_GENERATORS = 3,
  DC_STATUS_NOT_MEMBER = 4,
  DC_STATUS_SEARCH_EXHAUSTED = 5,
  DC_STATUS_NOT_COHEN_MACAULAY = 6,
  DC_STATUS_POINT_OUTSIDE_SEMIGROUP = 7,
  DC_STATUS_BAD_RESIDUE_FIELD = 8,
  DC_STATUS_INVALID_ARGUMENT = 9,
  DC_STATUS_OVERFLOW = 10,
  DC_STATUS_PANIC = 11,
} DcStatus;

/**
 * Opaque derivation module.
 */
typedef struct DcDerivationModule DcDerivationModule;

/**
 * Opaque plane semigroup.
 */
typedef struct DcPlane DcPlane;

/**
 * Opaque numerical semigroup.
 */
typedef struct DcSemigroup DcSemigroup;

/**
 * A point `(a, b)` of the plane semigroup: `a` is the `v`-exponent and `b`
 * the `u`-exponent.
 */
typedef struct DcPoint {
  int64_t a;
  int64_t b;
} DcPoint;

/**
 * Monomial derivation `v^v_exp u^u_exp ∂/∂u` (`partial_u` true) or `∂/∂v`.
 */
typedef struct DcGenerator {
  enum DcDerKind kind;
  int64_t v_exp;
  int64_t u_exp;
  bool partial_u;
} DcGenerator;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *dc_last_error_message(void);

/**
 * Validates `gens[0..len]` and creates a semigroup handle.
 *
 * # Safety
 * `gens` must point to `len` readable values; `out` must be writable.
 */
enum DcStatus dc_semigroup_new(const int64_t *gens, size_t len, struct DcSemigroup **out);

/**
 * # Safety
 * `s` must come from [`dc_semigroup_new`] and not be freed twice.
 */
void dc_semigroup_free(struct DcSemigroup *s);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DcStatus dc_semigroup_frobenius(const struct DcSemigroup *s, int64_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DcStatus dc_semigroup_type(const struct DcSemigroup *s, size_t *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DcStatus dc_semigroup_contains(const struct DcSemigroup *s, int64_t x, bool *out);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DcStatus dc_semigroup_is_homogeneous(const struct DcSemigroup *s, bool *out);

/**
 * Pseudo-Frobenius numbers in increasing order.
 *
 * # Safety
 * `s` must be a live handle, `buf` must hold `cap` values, `len` writable.
 */
enum DcStatus dc_semigroup_pseudo_frobenius(const struct DcSemigroup *s,
                                            int64_t *buf,
                                            size_t cap,
                                            size_t *len);

/**
 * Apéry set with respect to the member `m`, indexed by residue.
 *
 * # Safety
 * As [`dc_semigroup_pseudo_frobenius`].
 */
enum DcStatus dc_semigroup_apery(const struct DcSemigroup *s,
                                 int64_t m,
                                 int64_t *buf,
                                 size_t cap,
                                 size_t *len);

/**
 * # Safety
 * `s` must be a live handle and `out` writable.
 */
enum DcStatus dc_plane_new(const struct DcSemigroup *s, struct DcPlane **out);

/**
 * # Safety
 * `p` must come from [`dc_plane_new`] and not be freed twice.
 */
void dc_plane_free(struct DcPlane *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum DcStatus dc_plane_contains(const struct DcPlane *p, int64_t a, int64_t b, bool *out);

/**
 * Degree bound used when `0` is passed to [`dc_plane_cm_check`].
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum DcStatus dc_plane_default_cm_bound(const struct DcPlane *p, uint32_t *out);

/**
 * Writes `true` to `equal` if no counterexample exists up to `bound`
 * (`0` selects the default); otherwise writes the counterexample.
 *
 * # Safety
 * `p` must be a live handle; `equal` and `counterexample` writable.
 */
enum DcStatus dc_plane_cm_check(const struct DcPlane *p,
                                uint32_t bound,
                                bool *equal,
                                struct DcPoint *counterexample);

/**
 * Assembles the derivation module at the default bounds.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum DcStatus dc_derivation_module_new(const struct DcPlane *p, struct DcDerivationModule **out);

/**
 * # Safety
 * `m` must come from [`dc_derivation_module_new`] and not be freed twice.
 */
void dc_derivation_module_free(struct DcDerivationModule *m);

/**
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum DcStatus dc_derivation_module_mu(const struct DcDerivationModule *m, size_t *out);

/**
 * # Safety
 * `m` must be a live handle and `out` writable.
 */
enum DcStatus dc_derivation_module_minimal_ideal_count(const struct DcDerivationModule *m,
                                                       size_t *out);

/**
 * Generators in the order D1, `u∂/∂u`, D2, `v∂/∂v`.
 *
 * # Safety
 * `m` must be a live handle, `buf` must hold `cap` values, `len` writable.
 */
enum DcStatus dc_derivation_module_generators(const struct DcDerivationModule *m,
                                              struct DcGenerator *buf,
                                              size_t cap,
                                              size_t *len);

/**
 * Ideal monomials, one per generator, duplicates retained.
 *
 * # Safety
 * As [`dc_derivation_module_generators`].
 */
enum DcStatus dc_derivation_module_ideal(const struct DcDerivationModule *m,
                                         struct DcPoint *buf,
                                         size_t cap,
                                         size_t *len);

/**
 * `1 + (h1+h2)·P_K` on the coefficients `pk[0..len]`; writes `len` values.
 *
 * # Safety
 * `pk` must hold `len` values and `out` must have room for `len`.
 */
enum DcStatus dc_der_series(uint64_t h1,
                            uint64_t h2,
                            const uint64_t *pk,
                            size_t len,
                            uint64_t *out);

/**
 * Full analysis report as JSON. `bound == 0` keeps the defaults. The string
 * must be released with [`dc_string_free`].
 *
 * # Safety
 * `gens` must hold `len` values and `out` must be writable.
 */
enum DcStatus dc_analyze_json(const int64_t *gens, size_t len, uint32_t bound, char **out);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void dc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DERCURVE_H */
