#ifndef REACHKIT_REACHKIT_H
#define REACHKIT_REACHKIT_H

/* C interface to the reachkit library.
 *
 * Every fallible call returns an rk_status; on failure a thread-local message
 * is available from rk_last_error(). Handles are opaque and owned by the
 * caller, who releases them with the matching *_destroy function. Strings
 * returned through char** out-parameters are released with rk_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(REACHKIT_BUILDING_LIBRARY)
#define RK_API __attribute__((visibility("default")))
#else
#define RK_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rk_status {
  RK_OK = 0,
  RK_INVALID_ARGUMENT = 1,
  RK_DIMENSION_MISMATCH = 2,
  RK_CONTROL_BOUND_VIOLATION = 3,
  RK_DEGENERATE_ZERO_POLYNOMIAL = 4,
  RK_TOO_FEW_GENERATORS = 5,
  RK_COMBINATORIAL_BUDGET_EXCEEDED = 6,
  RK_BUDGET_EXCEEDED = 7,
  RK_UNSUPPORTED_INITIAL_SET = 8,
  RK_ZERO_DIRECTION = 9,
  RK_DEGENERATE_HULL = 10,
  RK_PARSE_ERROR = 11,
  RK_INTERNAL_ERROR = 99
} rk_status;

typedef enum rk_rule {
  /* n + 1 generators at t_i = i t / n, i = 0..n. */
  RK_RULE_BREAKPOINTS = 0,
  /* n generators at the left endpoints, i = 0..n-1. */
  RK_RULE_LEFT_ENDPOINT = 1
} rk_rule;

typedef enum rk_format { RK_FORMAT_CSV = 0, RK_FORMAT_JSON = 1 } rk_format;

typedef struct rk_reach rk_reach;
typedef struct rk_table rk_table;

RK_API const char* rk_version(void);
RK_API const char* rk_status_name(rk_status status);
/* Message of the last failed call on this thread; empty if none. */
RK_API const char* rk_last_error(void);
RK_API void rk_string_free(char* s);

/* Worker cap for parallel kernels; k <= 0 restores the hardware default. */
RK_API void rk_set_threads(int k);
RK_API int rk_get_threads(void);

/* Reach problem for the d-th order integrator with |u| <= mu over [0, t].
 * mu and t are decimal or p/q strings (kept exact for the volume formula).
 * x0_json describes the initial set; NULL means the origin. */
RK_API rk_status rk_reach_create(int d, const char* mu, const char* t, const char* x0_json, rk_reach** out);
RK_API void rk_reach_destroy(rk_reach* reach);
RK_API int rk_reach_dim(const rk_reach* reach);
RK_API int rk_reach_singleton_start(const rk_reach* reach);

RK_API rk_status rk_support(const rk_reach* reach, const double* y, size_t len, double* out);
RK_API rk_status rk_width(const rk_reach* reach, const double* eta, size_t len, double* out);
/* Closed-form diameter for a singleton start; for any other start a sampled
 * maximum over `samples` directions with *approximate set to 1. direction
 * receives d values. */
RK_API rk_status rk_diameter(const rk_reach* reach, int samples, double* value, double* direction, int* approximate);

/* Exact volume of the reach set from a single point, as "p/q" plus its value. */
RK_API rk_status rk_volume(const rk_reach* reach, char** exact, double* approx);
RK_API rk_status rk_limit_coefficient(int d, int cap, char** exact, double* approx);
RK_API rk_status rk_vandermonde_sum(int d, int n, char** exact);
/* Columns n, vol_n, gap. */
RK_API rk_status rk_volume_convergence(const rk_reach* reach, const int* n_list, size_t count, rk_rule rule,
                                       rk_table** out);
/* Zonotope volume of exp(tA) X0 plus the n-segment reach zonotope. */
RK_API rk_status rk_volume_estimate(const rk_reach* reach, int n, rk_rule rule, double* out);

RK_API rk_status rk_width_profile(const rk_reach* reach, int grid, rk_table** out);
RK_API rk_status rk_boundary(const rk_reach* reach, int samples, rk_table** out);
RK_API rk_status rk_tube(const rk_reach* reach, int slices, int samples, rk_table** out);
/* Columns n, delta, eta_1..eta_d; generators follow the breakpoint rule. */
RK_API rk_status rk_hausdorff(const rk_reach* reach, const int* n_list, size_t count, int samples, rk_table** out);
/* Seeded bang-bang endpoint cloud (columns x_1..x_d, switch_count). When
 * hull_area is non-NULL and d = 2 it receives the convex hull area. */
RK_API rk_status rk_oracle(const rk_reach* reach, int count, int max_switches, uint64_t seed, rk_table** cloud,
                           double* hull_area);

RK_API void rk_table_destroy(rk_table* table);
RK_API size_t rk_table_rows(const rk_table* table);
RK_API size_t rk_table_columns(const rk_table* table);
RK_API const char* rk_table_column_name(const rk_table* table, size_t column);
RK_API double rk_table_value(const rk_table* table, size_t row, size_t column);
RK_API size_t rk_table_meta_count(const rk_table* table);
RK_API const char* rk_table_meta_name(const rk_table* table, size_t index);
RK_API size_t rk_table_meta_size(const rk_table* table, size_t index);
RK_API double rk_table_meta_value(const rk_table* table, size_t index, size_t position);
RK_API rk_status rk_table_render(const rk_table* table, rk_format format, char** out);
/* Atomic write: on failure no file is left at path. */
RK_API rk_status rk_table_write(const rk_table* table, const char* path, rk_format format);

#ifdef __cplusplus
}
#endif

#endif
