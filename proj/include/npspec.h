/*
 * npspec - Neumann-Poincare spectra on thin spheroids and flat two-sheet
 * domains. C interface of the shared library: plain functions for the
 * closed-form quantities, opaque handles for discretized operators and
 * spectra. All functions return npspec_status; outputs go through pointers.
 * On failure a thread-local message is available via npspec_last_error().
 */

#ifndef NPSPEC_H
#define NPSPEC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum npspec_status {
  NPSPEC_OK = 0,
  NPSPEC_ERR_DOMAIN = 1,
  NPSPEC_ERR_RANGE = 2,
  NPSPEC_ERR_SINGULAR = 3,
  NPSPEC_ERR_RESOLUTION = 4,
  NPSPEC_ERR_OVERFLOW = 5,
  NPSPEC_ERR_POLE = 6,
  NPSPEC_ERR_ALIASING = 7,
  NPSPEC_ERR_BUDGET = 8,
  NPSPEC_ERR_INVARIANT = 9,
  NPSPEC_ERR_NONCONVERGED = 10,
  NPSPEC_ERR_INVALID = 11,
  NPSPEC_ERR_INTERNAL = 12
} npspec_status;

const char* npspec_version(void);
const char* npspec_status_name(npspec_status s);
/* message of the most recent failure on this thread; empty string if none */
const char* npspec_last_error(void);

/* ---- special functions ---- */
npspec_status npspec_legendre_p(int n, int m, double z, double* out);
npspec_status npspec_legendre_q(int n, int m, double z, double* out);
npspec_status npspec_legendre_pq_derivative(int n, int m, double z, double* out);
npspec_status npspec_bessel_k(int order, double x, double* out);
npspec_status npspec_khat(double xi, double* out);

/* ---- analytic prolate eigenvalues ---- */
npspec_status npspec_r_to_l(double R, double* L);
npspec_status npspec_l_to_r(double L, double* R);
npspec_status npspec_prolate_eigenvalue(int n, int m, double L, double* out);
npspec_status npspec_half_property_defect(int n, double L, double* out);
/* achieved may be NULL */
npspec_status npspec_tune_L(int n, int m, double target, double* L_star, double* achieved);

/* ---- limit symbols ---- */
npspec_status npspec_l0_kernel(double t, double* out);
npspec_status npspec_l0_hat(double xi, double* out);
/* capped (may be NULL) is set to 1 when the search hit the xi = 1e4 cap */
npspec_status npspec_solve_xi0_prolate(double lambda, double* xi0, int* capped);
npspec_status npspec_solve_xi0_flat(double lambda, double* xi0);
npspec_status npspec_poisson_kernel(double t, double x1, double x2, double* out);
npspec_status npspec_poisson_hat(double t, double xi1, double xi2, double* out);
/* parity: +1 even, -1 odd */
npspec_status npspec_two_sheet_symbol(double xi1, double xi2, int parity, double* out);

/* ---- pointwise NP kernels ---- */
npspec_status npspec_h_kernel(double R, double x3, double y3, double* out);
npspec_status npspec_prolate_measure(double R, double t, double* out);
/* j = 1 same-sheet, j = 2 cross-sheet */
npspec_status npspec_oblate_k(int j, double R, double a, const double x[2], const double y[2],
                              double* out);
npspec_status npspec_omega_weight(double R, double a, const double x[2], double* out);
npspec_status npspec_oblate_radial_kernel(double R, double a, int m, int j, double r, double s,
                                          double* out);

/* ---- Nystrom operators and spectra (opaque handles) ---- */
typedef struct npspec_operator npspec_operator;
typedef struct npspec_spectrum npspec_spectrum;

npspec_status npspec_discretize_prolate(double R, int N, npspec_operator** out);
/* parity: +1 even, -1 odd */
npspec_status npspec_discretize_oblate(double R, double a, int m, int parity, int N,
                                       npspec_operator** out);
int npspec_operator_size(const npspec_operator* op);
double npspec_operator_asymmetry(const npspec_operator* op);
const char* npspec_operator_scheme(const npspec_operator* op);
void npspec_operator_free(npspec_operator* op);

npspec_status npspec_operator_eigenvalues(const npspec_operator* op, npspec_spectrum** out);
int npspec_spectrum_size(const npspec_spectrum* sp);
npspec_status npspec_spectrum_get(const npspec_spectrum* sp, int i, double* re, double* im);
const char* npspec_spectrum_label(const npspec_spectrum* sp, int i);
double npspec_spectrum_imag_max(const npspec_spectrum* sp);
void npspec_spectrum_free(npspec_spectrum* sp);

/* ---- quasi-mode residuals ---- */
/* l0_residual may be NULL */
npspec_status npspec_residual_prolate(double lambda, double sigma, double R, int n_points,
                                      double* residual, double* l0_residual);
/* k1_term / k2_term may be NULL */
npspec_status npspec_residual_oblate(double lambda, double sigma, double R, double a,
                                     double* residual, double* k1_term, double* k2_term);
/* sidewall / fnorm_h12 may be NULL */
npspec_status npspec_residual_flat(double lambda, double sigma, double R, double* sheet,
                                   double* sidewall, double* fnorm_h12);

/* ---- plasmon resonance map ---- */
npspec_status npspec_dielectric_for_eigenvalue(double lambda, double* k);
npspec_status npspec_eigenvalue_for_dielectric(double k, double* lambda);

#ifdef __cplusplus
}
#endif

#endif /* NPSPEC_H */
