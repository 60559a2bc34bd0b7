/* frhopf: explicit Hopf-bifurcation analysis of fractional-order systems
 * with order 1 < alpha < 2.
 *
 * The library classifies the characteristic polynomial of a parameterized
 * system through a 2n x 2n fractional-order Routh-Hurwitz matrix: all even
 * leading principal minors positive means every eigenvalue lies in the
 * stable sector |arg z| > alpha*pi/2; a vanishing top minor with positive
 * lower minors and a negative auxiliary minor marks a candidate Hopf point
 * whose boundary eigenvalue pair is r0 * exp(+-i alpha pi/2) with
 * r0 = -auxiliary / second-highest minor. On top of the point test it
 * maps bifurcation curves over two-parameter windows, refines crossings,
 * decides transversality from finite-difference derivatives of the top
 * minor, and cross-validates with a root oracle and a time-domain
 * Caputo predictor-corrector integrator.
 *
 * All functions returning frh_status leave outputs untouched on failure;
 * frh_last_error() describes the most recent failure in the calling
 * thread.
 */
#ifndef FRHOPF_H
#define FRHOPF_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frh_status {
    FRH_OK = 0,
    FRH_ERR_BAD_ARGUMENT = 1,
    FRH_ERR_ALPHA_RANGE = 2,
    FRH_ERR_SYNTAX = 3,
    FRH_ERR_UNKNOWN_FUNCTION = 4,
    FRH_ERR_UNBOUND_IDENTIFIER = 5,
    FRH_ERR_EVAL = 6,
    FRH_ERR_CONVERGENCE = 7,
    FRH_ERR_DEGENERATE_MINOR = 8,
    FRH_ERR_NOT_CRITICAL = 9,
    FRH_ERR_NO_SIGN_CHANGE = 10,
    FRH_ERR_SIDE_CONDITION = 11,
    FRH_ERR_NOT_ON_SURFACE = 12,
    FRH_ERR_NEWTON_DIVERGED = 13,
    FRH_ERR_STATIONARY_OFF_SURFACE = 14,
    FRH_ERR_WINDOW_DEGENERATE = 15,
    FRH_ERR_AXIS_UNKNOWN = 16,
    FRH_ERR_STEP_TOO_LARGE = 17,
    FRH_ERR_TRAJECTORY_TOO_SHORT = 18,
    FRH_ERR_DIMENSION = 19,
    FRH_ERR_INTERNAL = 20
} frh_status;

typedef enum frh_verdict {
    FRH_STABLE = 0,
    FRH_HOPF_CANDIDATE = 1,
    FRH_INDETERMINATE = 2
} frh_verdict;

typedef enum frh_transversality {
    FRH_TRANSVERSAL = 0,
    FRH_DEGENERATE_STATIONARY = 1,
    FRH_INCONCLUSIVE = 2
} frh_transversality;

typedef enum frh_definiteness {
    FRH_HESS_INDEFINITE = 0,
    FRH_HESS_POS_DEFINITE = 1,
    FRH_HESS_NEG_DEFINITE = 2,
    FRH_HESS_SEMIDEFINITE = 3,
    FRH_HESS_NOT_COMPUTED = 4
} frh_definiteness;

typedef struct frh_tolerances {
    double minor_rel;      /* minor value tolerance factor (times max(1, Hadamard bound)) */
    double pivot_tol;      /* equilibrated-pivot floor deciding a zero minor sign */
    double arg_tol;        /* sector boundary band on |arg z| */
    double zero_modulus;   /* roots below this modulus count as zero-roots */
    double grad_rel;       /* transversality gradient threshold factor */
    double eig_rel;        /* Hessian eigenvalue classification band */
    double root_residual;  /* root acceptance residual factor */
    double refine_rel;     /* bisection segment-parameter uncertainty */
} frh_tolerances;

typedef struct frh_system frh_system;         /* parameterized polynomial family */
typedef struct frh_report frh_report;         /* criterion outcome at one parameter point */
typedef struct frh_scan_result frh_scan_result;
typedef struct frh_trajectory frh_trajectory;

const char* frh_version(void);
const char* frh_status_name(frh_status s);
/* Detail message for the last failing call in this thread ("" if none). */
const char* frh_last_error(void);
void frh_default_tolerances(frh_tolerances* out);

/* ------------------------------------------------------------------ */
/* Systems                                                             */

/* Built-in three-neuron demo system. `k` is a row-major 3x3 gain matrix
 * or NULL for the default (2,2,2; -2,-2,2; -2,1,-2). */
frh_status frh_system_create_demo(double alpha, const double* k, frh_system** out);

/* Degree-n family with coefficient expressions a1..an over the named
 * parameters and "alpha". Expression language: numbers, identifiers,
 * + - * / ^int, sin cos tan tanh exp sqrt abs, constant pi. */
frh_status frh_system_create_expr(int degree, const char* const* coeff_exprs,
                                  const char* const* param_names, int n_params, double alpha,
                                  frh_system** out);
void frh_system_free(frh_system* sys);

int frh_system_degree(const frh_system* sys);
int frh_system_param_count(const frh_system* sys);
const char* frh_system_param_name(const frh_system* sys, int index);
double frh_system_alpha(const frh_system* sys);
int frh_system_has_vector_field(const frh_system* sys);
/* a1..an at the parameter point mu (length = param count). */
frh_status frh_system_coefficients(const frh_system* sys, const double* mu, double* out_coeffs);

/* ------------------------------------------------------------------ */
/* Point classification                                                */

frh_status frh_classify(const frh_system* sys, const double* mu, frh_report** out);
void frh_report_free(frh_report* report);

int frh_report_degree(const frh_report* report);
frh_verdict frh_report_verdict(const frh_report* report);
frh_status frh_report_coefficients(const frh_report* report, double* out_coeffs);
/* Leading minors (n values) and the auxiliary minor. Either output may be NULL. */
frh_status frh_report_minors(const frh_report* report, double* out_leading, double* out_auxiliary);
/* Hadamard bounds matching the minors (n values + auxiliary). */
frh_status frh_report_minor_scales(const frh_report* report, double* out_leading,
                                   double* out_auxiliary);
/* Critical radius r0; NaN unless the verdict is FRH_HOPF_CANDIDATE. */
double frh_report_critical_radius(const frh_report* report);
/* The boundary pair r0 * exp(+-i alpha pi/2); fails with
 * FRH_ERR_NOT_CRITICAL unless the verdict is FRH_HOPF_CANDIDATE. */
frh_status frh_report_critical_pair(const frh_report* report, double* out_re, double* out_im);
/* Root oracle: all n roots, conjugate pairs adjacent. */
int frh_report_root_count(const frh_report* report);
frh_status frh_report_root(const frh_report* report, int index, double* out_re, double* out_im,
                           double* out_modulus, double* out_argument);
frh_status frh_report_sector_counts(const frh_report* report, int* out_stable, int* out_critical,
                                    int* out_unstable, int* out_zero);

/* ------------------------------------------------------------------ */
/* Parameter-space machinery                                           */

/* Scan a two-parameter window on a res1 x res2 grid. `mu_fixed` supplies
 * values for all parameters (axis entries are overwritten). `threads` = 0
 * uses the machine parallelism. Results are ordered by grid index. */
frh_status frh_scan(const frh_system* sys, const char* axis1, const char* axis2,
                    const double* mu_fixed, double x0, double x1, double y0, double y1, int res1,
                    int res2, int threads, frh_scan_result** out);
void frh_scan_free(frh_scan_result* scan);
int frh_scan_size(const frh_scan_result* scan);
frh_status frh_scan_point(const frh_scan_result* scan, int index, double* out_mu, double* out_r0,
                          frh_transversality* out_transversality);

/* Bisection refinement on the segment [mu_a, mu_b]; requires a top-minor
 * sign change and side conditions holding at both endpoints. */
frh_status frh_refine_segment(const frh_system* sys, const double* mu_a, const double* mu_b,
                              double* out_mu, double* out_r0,
                              frh_transversality* out_transversality);

/* Transversality test at a surface point: finite-difference gradient of
 * the top minor, then Hessian definiteness when the gradient vanishes.
 * `out_gradient` (param count) may be NULL. */
frh_status frh_transversality_test(const frh_system* sys, const double* mu, double* out_gradient,
                                   frh_definiteness* out_hessian, frh_transversality* out_verdict);

/* Damped-Newton search for a stationary point of the top minor (two free
 * parameters required), verified to lie on the bifurcation surface. */
frh_status frh_find_degenerate(const frh_system* sys, const double* guess, double* out_mu,
                               frh_definiteness* out_hessian, double* out_top_minor);

/* ------------------------------------------------------------------ */
/* Time-domain simulation (built-in demo system only)                  */

/* Caputo predictor-corrector over [0, horizon] with uniform step. `v0`
 * may be NULL for a zero initial derivative. */
frh_status frh_simulate(const frh_system* sys, const double* mu, const double* x0,
                        const double* v0, double horizon, double step, frh_trajectory** out);
void frh_trajectory_free(frh_trajectory* trajectory);
int frh_trajectory_size(const frh_trajectory* trajectory);
int frh_trajectory_dim(const frh_trajectory* trajectory);
frh_status frh_trajectory_sample(const frh_trajectory* trajectory, int index, double* out_t,
                                 double* out_x);
/* Index of the first non-finite step, or -1. */
int frh_trajectory_blowup_index(const frh_trajectory* trajectory);
double frh_trajectory_max_residual(const frh_trajectory* trajectory);
/* Peak-to-peak amplitude of ||x|| over the trailing fraction of the horizon. */
frh_status frh_oscillation_metric(const frh_trajectory* trajectory, double tail_fraction,
                                  double* out);

/* ------------------------------------------------------------------ */
/* Self test                                                           */

typedef void (*frh_log_fn)(const char* line, void* user);
/* Runs the built-in property suites, one log line per suite, and stores
 * the number of failed suites. `log` may be NULL. */
frh_status frh_selftest(frh_log_fn log, void* user, int* out_failed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FRHOPF_H */
