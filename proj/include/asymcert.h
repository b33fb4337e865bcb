/* Public C API of the asymcert shared library.
 *
 * Exact feasibility and subset-non-triviality decisions for linear systems
 * of strict and non-strict inequalities, via asymptotic linear programming
 * over rational functions of a large parameter K.
 *
 * All results are returned as heap-allocated JSON strings; release them with
 * ac_string_free. Systems are opaque handles released with ac_system_free.
 * Every function returns AC_OK on success; on failure *err_msg (when
 * non-NULL) receives a message, also to be released with ac_string_free.
 */
#ifndef ASYMCERT_H
#define ASYMCERT_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  AC_OK = 0,
  AC_ERR_INVALID_ARGUMENT = 1, /* bad pointer, count, subset, ... */
  AC_ERR_PARSE = 2,            /* malformed system text or JSON */
  AC_ERR_ARITHMETIC = 3,       /* pole, division by zero, domain error */
  AC_ERR_LIMIT = 4,            /* pivot ceiling exceeded */
  AC_ERR_INTERNAL = 5          /* invariant violation inside the library */
} ac_status;

typedef struct ac_system ac_system;

typedef struct {
  long pivot_limit;        /* <= 0: default ceiling 10*(rows+cols)^2 */
  unsigned long long seed; /* selftest RNG seed */
  int selftest_trials;     /* <= 0: default 50 */
} ac_options;

void ac_options_init(ac_options *options);

const char *ac_status_name(ac_status status);
void ac_string_free(char *s);

/* Constraint text, one row per line:
 *   <term> (+|- <term>)* <rel> <rational>
 * rel in {<=, <, >=, >, =}; terms like `y1`, `2 y2`, `3/2*x`; `#` comments;
 * optional leading `vars: y1 y2 ...` header fixing variable order. */
ac_status ac_system_parse_text(const char *text, ac_system **out, char **err_msg);

/* JSON mirror of the same data:
 * {"variables": [...], "constraints":
 *   [{"coeffs": {"y1": "2", ...}, "relation": "<=", "rhs": "3"}, ...]}
 * with every rational as a "p" or "p/q" string. */
ac_status ac_system_parse_json(const char *json_text, ac_system **out, char **err_msg);

ac_status ac_system_to_json(const ac_system *sys, char **json_out);
void ac_system_free(ac_system *sys);

/* Certificate data for concrete rational scalars: numerator polynomial in K,
 * B coefficients, the root bound gamma and the triviality verdict. */
ac_status ac_certify(const char *const *scalars, size_t count, char **json_out, char **err_msg);

/* Coefficient-matrix reduction chain for dimension n (n >= 2): every level,
 * the terminal value n-1 and an independent determinant check. */
ac_status ac_omega_chain(int n, char **json_out, char **err_msg);

/* Eventual feasibility (K -> infinity) of the system after rewriting strict
 * rows through the shared-slack gadget, with witness and oracle sample. */
ac_status ac_solve_asym(const ac_system *sys, const ac_options *options, char **json_out,
                        char **err_msg);

/* The two-part decision: feasibility, then whether the named subset may be
 * simultaneously non-trivial (both certificate sign branches). With
 * with_audit != 0 the result gains an "audit" object from the independent
 * fixed-K re-check. */
ac_status ac_decide(const ac_system *sys, const char *const *subset, size_t subset_len,
                    const ac_options *options, int with_audit, char **json_out, char **err_msg);

/* Randomized property suites; JSON "passed" is the overall verdict. */
ac_status ac_selftest(const ac_options *options, char **json_out, char **err_msg);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ASYMCERT_H */
