#ifndef BERGMAN_KIT_H
#define BERGMAN_KIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  BK_OK = 0,
  BK_INVALID_ARGUMENT = 1,
  BK_DOMAIN = 2,
  BK_INTEGRATION = 3,
  BK_PARSE = 4,
  BK_UNKNOWN_CHECK = 5,
  BK_INTERNAL = 6
} bk_status;

typedef enum { BK_FORMAT_JSON = 0, BK_FORMAT_CSV = 1 } bk_format;

typedef struct {
  double re;
  double im;
} bk_complex;

typedef struct bk_rule bk_rule;
typedef struct bk_function bk_function;
typedef struct bk_record bk_record;

/* Message of the last failed call on this thread; "" when none. */
BK_API const char* bk_last_error(void);
/* Offset into the parsed text for BK_PARSE failures, 0 otherwise. */
BK_API size_t bk_last_error_position(void);
BK_API const char* bk_version(void);

/* Strings are copied into buf (NUL-terminated, truncated to cap); *needed
   receives the full length without the terminator. */

/* ---- quadrature rules ---- */
BK_API bk_status bk_rule_create(int radial_count, int angular_count, double alpha, bk_rule** out);
/* "64x256" */
BK_API bk_status bk_rule_parse(const char* text, double alpha, bk_rule** out);
BK_API void bk_rule_destroy(bk_rule* rule);
BK_API int bk_rule_radial_count(const bk_rule* rule);
BK_API int bk_rule_angular_count(const bk_rule* rule);
BK_API double bk_rule_alpha(const bk_rule* rule);
BK_API bk_status bk_integrate(const bk_function* f, const bk_rule* rule, bk_complex* out);
BK_API int bk_required_angular_count(double abs_z);

/* ---- function descriptors ---- */
/* poly:<c0>,<c1>,...  conj-monomial:<k>  ga:<a>  normkernel:<z0>  const:<c> */
BK_API bk_status bk_function_parse(const char* text, bk_function** out);
BK_API void bk_function_destroy(bk_function* f);
BK_API bk_status bk_function_canonical(const bk_function* f, char* buf, size_t cap, size_t* needed);
BK_API bk_status bk_function_eval(const bk_function* f, bk_complex z, bk_complex* out);
/* 1 for poly, normkernel and const. */
BK_API int bk_function_is_analytic(const bk_function* f);
/* Constant value for const descriptors; BK_INVALID_ARGUMENT otherwise. */
BK_API bk_status bk_function_constant(const bk_function* f, bk_complex* out);

BK_API bk_status bk_complex_parse(const char* text, bk_complex* out);
BK_API bk_status bk_complex_format(bk_complex z, char* buf, size_t cap, size_t* needed);

/* ---- kernels and maps ---- */
BK_API bk_status bk_kernel_disc(bk_complex z, bk_complex zeta, double alpha, bk_complex* out);
BK_API bk_status bk_kernel_series(bk_complex z, bk_complex zeta, size_t terms, bk_complex* out);
/* phi_a(w) = (a - w)/(1 - conj(a) w) and its derivative. */
BK_API bk_status bk_mobius(bk_complex a, bk_complex w, bk_complex* value, bk_complex* deriv);

typedef enum { BK_DOMAIN_DISC = 0, BK_DOMAIN_SLIT_PLANE = 1 } bk_domain;
/* Derivative at z of the Riemann map onto the disc normalised at base. */
BK_API bk_status bk_riemann_deriv(bk_domain domain, bk_complex base, bk_complex z, bk_complex* out);

/* ---- projections ---- */
BK_API bk_status bk_project(const bk_function* f, double alpha, bk_complex z, const bk_rule* rule, bk_complex* out);
/* rule must carry weight 0 */
BK_API bk_status bk_adjoint(const bk_function* g, double alpha, bk_complex z, const bk_rule* rule, bk_complex* out);
BK_API bk_status bk_blowup(double a, const bk_rule* rule, double* observed, double* expected);
/* Finite iff p (alpha+1) > 1, with p the conjugate of q. */
BK_API bk_status bk_adjoint_divergence_witness(double alpha, double q, int* finite, double* value);

/* ---- estimates ---- */
BK_API bk_status bk_integral_mean(const bk_function* f, double r, double p, int angular_count, double* out);
BK_API bk_status bk_forelli_rudin(bk_complex z, double s, double t, int radial_count, int angular_count,
                                  double* integral, double* ratio);

typedef struct {
  int diverged;
  double c_a;
  double c_b;
  double bound;            /* Schur bound for the majorant operator */
  double projection_bound; /* (alpha+1) * bound, on L^p(dm_alpha) */
} bk_schur_result;

/* Schur certificate for P_alpha on L^p; *record (optional) receives the report. */
BK_API bk_status bk_schur(double alpha, double p, int radial_count, int angular_count, bk_schur_result* out,
                          bk_record** record);

/* ---- report records ---- */
BK_API bk_status bk_record_create(const char* name, bk_record** out);
BK_API void bk_record_destroy(bk_record* rec);
BK_API bk_status bk_record_param_double(bk_record* rec, const char* key, double v);
BK_API bk_status bk_record_param_int(bk_record* rec, const char* key, int64_t v);
BK_API bk_status bk_record_param_complex(bk_record* rec, const char* key, bk_complex v);
BK_API bk_status bk_record_param_string(bk_record* rec, const char* key, const char* v);
BK_API bk_status bk_record_param_bool(bk_record* rec, const char* key, int v);
BK_API bk_status bk_record_observed_double(bk_record* rec, double v);
BK_API bk_status bk_record_observed_complex(bk_record* rec, bk_complex v);
BK_API bk_status bk_record_observed_divergent(bk_record* rec);
BK_API bk_status bk_record_expected_double(bk_record* rec, double v);
BK_API bk_status bk_record_expected_complex(bk_record* rec, bk_complex v);
BK_API bk_status bk_record_expected_bound(bk_record* rec, double v);
BK_API bk_status bk_record_tolerance(bk_record* rec, double tol);
BK_API bk_status bk_record_resolution(bk_record* rec, const char* resolution);
BK_API int bk_record_pass(const bk_record* rec);
BK_API bk_status bk_record_format(const bk_record* rec, bk_format format, char* buf, size_t cap, size_t* needed);
BK_API const char* bk_csv_header(void);

/* ---- verification suite ---- */
BK_API size_t bk_check_count(void);
BK_API const char* bk_check_name(size_t index);

typedef struct {
  const char* const* checks; /* NULL with check_count 0 runs every check */
  size_t check_count;
  int radial_count;  /* 0: 64 */
  int angular_count; /* 0: 256 */
  uint64_t seed;
  unsigned threads;  /* 0: default, capped by BERGMAN_KIT_THREADS */
  bk_format format;
} bk_suite_config;

typedef void (*bk_line_fn)(const char* line, void* user);

/* Emits one formatted record per line, in check order. *exit_status is 0 when
   every record passes and 1 otherwise. Unknown names fail with
   BK_UNKNOWN_CHECK before any check runs. */
BK_API bk_status bk_suite_run(const bk_suite_config* config, bk_line_fn sink, void* user, int* exit_status);

#ifdef __cplusplus
}
#endif

#endif
