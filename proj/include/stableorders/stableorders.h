#ifndef STABLEORDERS_H
#define STABLEORDERS_H

/* C interface to the stableorders library. All functions return an so_status;
 * on failure so_last_error() describes the violated precondition. Strings
 * returned through char** are heap-allocated and released with so_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(SO_BUILDING_LIBRARY)
#define SO_API __attribute__((visibility("default")))
#else
#define SO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum so_status {
  SO_OK = 0,
  SO_ERR_DOMAIN = 1,           /* parameter outside its mathematical range */
  SO_ERR_INVALID_ARGUMENT = 2, /* malformed input: unknown id, null pointer, bad size */
  SO_ERR_NO_MEMORY = 3,
  SO_ERR_INTERNAL = 4
} so_status;

typedef struct so_rng so_rng;
typedef struct so_plan so_plan;

SO_API const char* so_version(void);
/* Message for the last failed call on this thread; "" if none. */
SO_API const char* so_last_error(void);
SO_API void so_string_free(char* s);
/* Worker threads used for sampling (capped by STABLE_ORDERS_THREADS). */
SO_API unsigned so_thread_count(void);

/* Counter-based generator. Batch functions below derive fixed substreams from
 * the handle without advancing it, so equal handles give equal output. */
SO_API so_status so_rng_create(uint64_t seed, uint64_t stream, so_rng** out);
SO_API void so_rng_destroy(so_rng* rng);
SO_API uint64_t so_rng_seed(const so_rng* rng);

/* dist: "Z", "M", "K" (need alpha in (0,1)), "S", "L", "F" (Frechet, needs gamma > 0). */
SO_API so_status so_sample(const so_rng* rng, const char* dist, double alpha, double gamma, size_t n, double* out);

/* JSON array of {s, estimate, std_error, expected, z, pass} for E[X^s], with
 * X = Z^{-1} for dist "Z" (negative moments), else X itself. */
SO_API so_status so_moments_json(const so_rng* rng, const char* dist, double alpha, double gamma, const double* s,
                                 size_t ns, size_t n, int* all_pass, char** json);

/* E_alpha(-x) with regime and error estimate; bounds added when with_bounds != 0. */
SO_API so_status so_ml_eval_json(double alpha, double x, int with_bounds, char** json);
SO_API so_status so_ml_bounds_json(double alpha, double x, char** json);

/* claim: thmA-st, thmA-cx, thmB, thmC-st, thmC-cx, mike, kanter-stK, kanter-cxK,
 * kanter-stKa, kanter-cxKa, frechet-corollary. For mike and kanter-* the
 * alphas array is (beta, alpha); thmC-* and frechet-corollary take one alpha. */
SO_API so_status so_order_check_json(const so_rng* rng, const char* claim, const double* alphas, size_t count,
                                     size_t n, int* pass, char** json);

/* dist: "Z", "M", "S", "L". alpha is ignored for S and L. When with_bounds != 0
 * the median bounds are added, with m_S from a fresh estimate (use_certified_ms
 * == 0) or the certified ceiling 0.2274682. */
SO_API so_status so_median_json(const so_rng* rng, const char* dist, double alpha, size_t n, int with_bounds,
                                int use_certified_ms, char** json);
/* pass is 1 when every applicable inequality holds; covered reports whether any applies. */
SO_API so_status so_mmm_check_json(const so_rng* rng, double alpha, size_t n, int* pass, int* covered, char** json);

/* kind: "beta-gamma", "beta" or "K"; represents Z_{p/n}^{-p} (or K_{n,p}). */
SO_API so_status so_plan_create(int p, int n, const char* kind, so_plan** out);
SO_API void so_plan_destroy(so_plan* plan);
SO_API so_status so_plan_json(const so_plan* plan, char** json);
SO_API so_status so_plan_sample(const so_plan* plan, const so_rng* rng, size_t n, double* out);
/* Factor-by-factor analytic E[plan^s]. */
SO_API so_status so_plan_moment(const so_plan* plan, double s, double* out);
/* Gamma(1+ns)/Gamma(1+ps). */
SO_API so_status so_plan_target_moment(int p, int n, double s, double* out);

/* X+(alpha, rho) draws; requires 0 < rho < 1 and alpha rho <= 1. */
SO_API so_status so_branch_sample(const so_rng* rng, double alpha, double rho, size_t n, double* out);
/* {rho, x, c_rho, density, cdf} for c_rho X+(1, rho). */
SO_API so_status so_branch_density_json(double rho, double x, char** json);

typedef void (*so_progress_fn)(int id, const char* status, double runtime_ms, void* user);
/* suite: "all" or comma-separated ids 1..11. runtime_ms is left out of the JSON
 * when include_runtime == 0. */
SO_API so_status so_repro_json(const char* suite, uint64_t seed, int include_runtime, so_progress_fn progress,
                               void* user, int* all_pass, char** json);

#ifdef __cplusplus
}
#endif

#endif
