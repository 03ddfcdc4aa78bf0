#include "npspec.h"

#include <cstring>
#include <memory>
#include <string>

#include "npspec/errors.hpp"
#include "npspec/kernels.hpp"
#include "npspec/limit_ops.hpp"
#include "npspec/plasmon.hpp"
#include "npspec/prolate.hpp"
#include "npspec/quasimode.hpp"
#include "npspec/specfun.hpp"
#include "npspec/spectra.hpp"

struct npspec_operator {
  npspec::spectra::DiscreteOperator op;
};

struct npspec_spectrum {
  npspec::SpectrumResult sp;
};

namespace {

thread_local std::string g_last_error;

npspec_status status_of(npspec::errc c) {
  using npspec::errc;
  switch (c) {
    case errc::domain: return NPSPEC_ERR_DOMAIN;
    case errc::range: return NPSPEC_ERR_RANGE;
    case errc::singular: return NPSPEC_ERR_SINGULAR;
    case errc::resolution: return NPSPEC_ERR_RESOLUTION;
    case errc::overflow: return NPSPEC_ERR_OVERFLOW;
    case errc::pole: return NPSPEC_ERR_POLE;
    case errc::aliasing: return NPSPEC_ERR_ALIASING;
    case errc::budget: return NPSPEC_ERR_BUDGET;
    case errc::invariant: return NPSPEC_ERR_INVARIANT;
    case errc::nonconverged: return NPSPEC_ERR_NONCONVERGED;
  }
  return NPSPEC_ERR_INTERNAL;
}

template <typename Fn>
npspec_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return NPSPEC_OK;
  } catch (const npspec::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return NPSPEC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return NPSPEC_ERR_INTERNAL;
  }
}

npspec_status require(bool cond, const char* msg) {
  if (cond) return NPSPEC_OK;
  g_last_error = msg;
  return NPSPEC_ERR_INVALID;
}

} // namespace

extern "C" {

const char* npspec_version(void) { return "0.1.0"; }

const char* npspec_status_name(npspec_status s) {
  switch (s) {
    case NPSPEC_OK: return "ok";
    case NPSPEC_ERR_DOMAIN: return "domain";
    case NPSPEC_ERR_RANGE: return "range";
    case NPSPEC_ERR_SINGULAR: return "singular";
    case NPSPEC_ERR_RESOLUTION: return "resolution";
    case NPSPEC_ERR_OVERFLOW: return "overflow";
    case NPSPEC_ERR_POLE: return "pole";
    case NPSPEC_ERR_ALIASING: return "aliasing";
    case NPSPEC_ERR_BUDGET: return "budget";
    case NPSPEC_ERR_INVARIANT: return "invariant";
    case NPSPEC_ERR_NONCONVERGED: return "nonconverged";
    case NPSPEC_ERR_INVALID: return "invalid";
    case NPSPEC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* npspec_last_error(void) { return g_last_error.c_str(); }

npspec_status npspec_legendre_p(int n, int m, double z, double* out) {
  if (auto s = require(out != nullptr, "legendre_p: out is NULL")) return s;
  return guarded([&] { *out = npspec::specfun::legendre_p(n, m, z); });
}

npspec_status npspec_legendre_q(int n, int m, double z, double* out) {
  if (auto s = require(out != nullptr, "legendre_q: out is NULL")) return s;
  return guarded([&] { *out = npspec::specfun::legendre_q(n, m, z); });
}

npspec_status npspec_legendre_pq_derivative(int n, int m, double z, double* out) {
  if (auto s = require(out != nullptr, "legendre_pq_derivative: out is NULL")) return s;
  return guarded([&] { *out = npspec::specfun::legendre_pq_product_derivative(n, m, z); });
}

npspec_status npspec_bessel_k(int order, double x, double* out) {
  if (auto s = require(out != nullptr, "bessel_k: out is NULL")) return s;
  return guarded([&] { *out = npspec::specfun::bessel_k(order, x); });
}

npspec_status npspec_khat(double xi, double* out) {
  if (auto s = require(out != nullptr, "khat: out is NULL")) return s;
  return guarded([&] { *out = npspec::specfun::khat(xi); });
}

npspec_status npspec_r_to_l(double R, double* L) {
  if (auto s = require(L != nullptr, "r_to_l: out is NULL")) return s;
  return guarded([&] { *L = npspec::prolate::r_to_l(R); });
}

npspec_status npspec_l_to_r(double L, double* R) {
  if (auto s = require(R != nullptr, "l_to_r: out is NULL")) return s;
  return guarded([&] { *R = npspec::prolate::l_to_r(L); });
}

npspec_status npspec_prolate_eigenvalue(int n, int m, double L, double* out) {
  if (auto s = require(out != nullptr, "prolate_eigenvalue: out is NULL")) return s;
  return guarded([&] { *out = npspec::prolate::eigenvalue({n, m}, L); });
}

npspec_status npspec_half_property_defect(int n, double L, double* out) {
  if (auto s = require(out != nullptr, "half_property_defect: out is NULL")) return s;
  return guarded([&] { *out = npspec::prolate::half_property_defect(n, L); });
}

npspec_status npspec_tune_L(int n, int m, double target, double* L_star, double* achieved) {
  if (auto s = require(L_star != nullptr, "tune_L: L_star is NULL")) return s;
  return guarded([&] {
    const auto r = npspec::prolate::tune_L({n, m}, target);
    *L_star = r.L;
    if (achieved) *achieved = r.achieved;
  });
}

npspec_status npspec_l0_kernel(double t, double* out) {
  if (auto s = require(out != nullptr, "l0_kernel: out is NULL")) return s;
  return guarded([&] { *out = npspec::limit_ops::l0_kernel(t); });
}

npspec_status npspec_l0_hat(double xi, double* out) {
  if (auto s = require(out != nullptr, "l0_hat: out is NULL")) return s;
  return guarded([&] { *out = npspec::limit_ops::l0_hat(xi); });
}

npspec_status npspec_solve_xi0_prolate(double lambda, double* xi0, int* capped) {
  if (auto s = require(xi0 != nullptr, "solve_xi0_prolate: out is NULL")) return s;
  return guarded([&] {
    const auto r = npspec::limit_ops::solve_xi0_prolate(lambda);
    *xi0 = r.value;
    if (capped) *capped = r.capped ? 1 : 0;
  });
}

npspec_status npspec_solve_xi0_flat(double lambda, double* xi0) {
  if (auto s = require(xi0 != nullptr, "solve_xi0_flat: out is NULL")) return s;
  return guarded([&] { *xi0 = npspec::limit_ops::solve_xi0_flat(lambda); });
}

npspec_status npspec_poisson_kernel(double t, double x1, double x2, double* out) {
  if (auto s = require(out != nullptr, "poisson_kernel: out is NULL")) return s;
  return guarded([&] { *out = npspec::limit_ops::poisson_kernel(t, {x1, x2}); });
}

npspec_status npspec_poisson_hat(double t, double xi1, double xi2, double* out) {
  if (auto s = require(out != nullptr, "poisson_hat: out is NULL")) return s;
  return guarded([&] { *out = npspec::limit_ops::poisson_hat(t, {xi1, xi2}); });
}

npspec_status npspec_two_sheet_symbol(double xi1, double xi2, int parity, double* out) {
  if (auto s = require(out != nullptr, "two_sheet_symbol: out is NULL")) return s;
  if (auto s = require(parity == 1 || parity == -1, "two_sheet_symbol: parity must be +1 or -1"))
    return s;
  return guarded([&] {
    *out = npspec::limit_ops::two_sheet_symbol(
        {xi1, xi2}, parity == 1 ? npspec::Parity::even : npspec::Parity::odd);
  });
}

npspec_status npspec_h_kernel(double R, double x3, double y3, double* out) {
  if (auto s = require(out != nullptr, "h_kernel: out is NULL")) return s;
  return guarded([&] { *out = npspec::kernels::h_kernel(R, x3, y3); });
}

npspec_status npspec_prolate_measure(double R, double t, double* out) {
  if (auto s = require(out != nullptr, "prolate_measure: out is NULL")) return s;
  return guarded([&] { *out = npspec::kernels::prolate_measure(R, t); });
}

npspec_status npspec_oblate_k(int j, double R, double a, const double x[2], const double y[2],
                              double* out) {
  if (auto s = require(out && x && y, "oblate_k: NULL argument")) return s;
  if (auto s = require(j == 1 || j == 2, "oblate_k: j must be 1 or 2")) return s;
  return guarded([&] {
    const npspec::Vec2 xv{x[0], x[1]}, yv{y[0], y[1]};
    *out = j == 1 ? npspec::kernels::oblate_k1(R, a, xv, yv)
                  : npspec::kernels::oblate_k2(R, a, xv, yv);
  });
}

npspec_status npspec_omega_weight(double R, double a, const double x[2], double* out) {
  if (auto s = require(out && x, "omega_weight: NULL argument")) return s;
  return guarded([&] { *out = npspec::kernels::omega_weight(R, a, {x[0], x[1]}); });
}

npspec_status npspec_oblate_radial_kernel(double R, double a, int m, int j, double r, double s,
                                          double* out) {
  if (auto st = require(out != nullptr, "oblate_radial_kernel: out is NULL")) return st;
  return guarded([&] { *out = npspec::kernels::oblate_radial_kernel(R, a, m, j, r, s); });
}

npspec_status npspec_discretize_prolate(double R, int N, npspec_operator** out) {
  if (auto s = require(out != nullptr, "discretize_prolate: out is NULL")) return s;
  return guarded([&] {
    auto h = std::make_unique<npspec_operator>();
    h->op = npspec::spectra::discretize_prolate(R, N);
    *out = h.release();
  });
}

npspec_status npspec_discretize_oblate(double R, double a, int m, int parity, int N,
                                       npspec_operator** out) {
  if (auto s = require(out != nullptr, "discretize_oblate: out is NULL")) return s;
  if (auto s = require(parity == 1 || parity == -1, "discretize_oblate: parity must be +1 or -1"))
    return s;
  return guarded([&] {
    auto h = std::make_unique<npspec_operator>();
    h->op = npspec::spectra::discretize_oblate(
        R, a, m, parity == 1 ? npspec::Parity::even : npspec::Parity::odd, N);
    *out = h.release();
  });
}

int npspec_operator_size(const npspec_operator* op) {
  return op ? static_cast<int>(op->op.matrix.rows()) : 0;
}

double npspec_operator_asymmetry(const npspec_operator* op) {
  return op ? op->op.asymmetry : 0.0;
}

const char* npspec_operator_scheme(const npspec_operator* op) {
  return op ? op->op.scheme.c_str() : "";
}

void npspec_operator_free(npspec_operator* op) { delete op; }

npspec_status npspec_operator_eigenvalues(const npspec_operator* op, npspec_spectrum** out) {
  if (auto s = require(op && out, "operator_eigenvalues: NULL argument")) return s;
  return guarded([&] {
    auto h = std::make_unique<npspec_spectrum>();
    h->sp = npspec::spectra::eigenvalues(op->op);
    *out = h.release();
  });
}

int npspec_spectrum_size(const npspec_spectrum* sp) {
  return sp ? static_cast<int>(sp->sp.entries.size()) : 0;
}

npspec_status npspec_spectrum_get(const npspec_spectrum* sp, int i, double* re, double* im) {
  if (auto s = require(sp != nullptr, "spectrum_get: NULL handle")) return s;
  if (auto s = require(i >= 0 && i < static_cast<int>(sp->sp.entries.size()),
                       "spectrum_get: index out of range"))
    return s;
  if (re) *re = sp->sp.entries[i].re;
  if (im) *im = sp->sp.entries[i].im;
  return NPSPEC_OK;
}

const char* npspec_spectrum_label(const npspec_spectrum* sp, int i) {
  if (!sp || i < 0 || i >= static_cast<int>(sp->sp.entries.size())) return "";
  return sp->sp.entries[i].label.c_str();
}

double npspec_spectrum_imag_max(const npspec_spectrum* sp) { return sp ? sp->sp.imag_max : 0.0; }

void npspec_spectrum_free(npspec_spectrum* sp) { delete sp; }

npspec_status npspec_residual_prolate(double lambda, double sigma, double R, int n_points,
                                      double* residual, double* l0_residual) {
  if (auto s = require(residual != nullptr, "residual_prolate: out is NULL")) return s;
  return guarded([&] {
    const auto r = npspec::quasimode::residual_prolate(lambda, sigma, R, n_points);
    *residual = r.residual;
    if (l0_residual) *l0_residual = r.l0_residual;
  });
}

npspec_status npspec_residual_oblate(double lambda, double sigma, double R, double a,
                                     double* residual, double* k1_term, double* k2_term) {
  if (auto s = require(residual != nullptr, "residual_oblate: out is NULL")) return s;
  return guarded([&] {
    const auto r = npspec::quasimode::residual_oblate(lambda, sigma, R, a);
    *residual = r.residual;
    if (k1_term) *k1_term = r.k1_term;
    if (k2_term) *k2_term = r.k2_term;
  });
}

npspec_status npspec_residual_flat(double lambda, double sigma, double R, double* sheet,
                                   double* sidewall, double* fnorm_h12) {
  if (auto s = require(sheet != nullptr, "residual_flat: out is NULL")) return s;
  return guarded([&] {
    const auto r = npspec::quasimode::residual_flat(lambda, sigma, R);
    *sheet = r.sheet;
    if (sidewall) *sidewall = r.sidewall;
    if (fnorm_h12) *fnorm_h12 = r.fnorm_h12;
  });
}

npspec_status npspec_dielectric_for_eigenvalue(double lambda, double* k) {
  if (auto s = require(k != nullptr, "dielectric_for_eigenvalue: out is NULL")) return s;
  return guarded([&] { *k = npspec::plasmon::dielectric_for_eigenvalue(lambda); });
}

npspec_status npspec_eigenvalue_for_dielectric(double k, double* lambda) {
  if (auto s = require(lambda != nullptr, "eigenvalue_for_dielectric: out is NULL")) return s;
  return guarded([&] { *lambda = npspec::plasmon::eigenvalue_for_dielectric(k); });
}

} // extern "C"
