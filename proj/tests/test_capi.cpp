#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "npspec.h"

TEST_CASE("version and status names") {
  CHECK(std::strlen(npspec_version()) > 0);
  CHECK(std::string(npspec_status_name(NPSPEC_OK)) == "ok");
  CHECK(std::string(npspec_status_name(NPSPEC_ERR_RANGE)) == "range");
}

TEST_CASE("scalar functions round-trip through the C surface") {
  double v = 0.0;
  REQUIRE(npspec_legendre_p(3, 2, 1.5, &v) == NPSPEC_OK);
  CHECK(v == doctest::Approx(28.125).epsilon(1e-14));
  REQUIRE(npspec_legendre_q(1, 0, 2.0, &v) == NPSPEC_OK);
  CHECK(v == doctest::Approx(std::log(3.0) - 1.0).epsilon(1e-13));
  REQUIRE(npspec_bessel_k(1, 1.0, &v) == NPSPEC_OK);
  CHECK(v == doctest::Approx(0.6019072301972346).epsilon(1e-13));
  REQUIRE(npspec_khat(0.0, &v) == NPSPEC_OK);
  CHECK(v == 2.0);
  REQUIRE(npspec_prolate_eigenvalue(1, 0, 2.0, &v) == NPSPEC_OK);
  CHECK(v == doctest::Approx(0.20416313399567093).epsilon(1e-13));
  REQUIRE(npspec_l0_hat(0.0, &v) == NPSPEC_OK);
  CHECK(v == doctest::Approx(0.5).epsilon(1e-9));
  REQUIRE(npspec_dielectric_for_eigenvalue(1.0 / 6.0, &v) == NPSPEC_OK);
  CHECK(v == doctest::Approx(-2.0).epsilon(1e-13));
  double L = 0.0, achieved = 0.0;
  REQUIRE(npspec_tune_L(1, 0, 0.3, &L, &achieved) == NPSPEC_OK);
  CHECK(std::abs(achieved - 0.3) < 1e-10);
  double xi0 = 0.0;
  int capped = -1;
  REQUIRE(npspec_solve_xi0_prolate(0.3, &xi0, &capped) == NPSPEC_OK);
  CHECK(capped == 0);
  REQUIRE(npspec_solve_xi0_prolate(1e-6, &xi0, &capped) == NPSPEC_OK);
  CHECK(capped == 1);
}

TEST_CASE("error statuses and thread-local messages") {
  double v = 0.0;
  CHECK(npspec_legendre_p(2, 3, 1.5, &v) == NPSPEC_ERR_DOMAIN);
  CHECK(std::strlen(npspec_last_error()) > 0);
  CHECK(npspec_legendre_p(2, 0, 2.0, nullptr) == NPSPEC_ERR_INVALID);
  CHECK(npspec_tune_L(1, 1, 0.4, &v, nullptr) == NPSPEC_ERR_RANGE);
  CHECK(std::string(npspec_last_error()).find("attainable") != std::string::npos);
  CHECK(npspec_dielectric_for_eigenvalue(0.5, &v) == NPSPEC_ERR_POLE);
  CHECK(npspec_h_kernel(2.0, 0.1, 0.1, &v) == NPSPEC_ERR_SINGULAR);
  CHECK(npspec_two_sheet_symbol(0.0, 0.0, 2, &v) == NPSPEC_ERR_INVALID);
  // success clears the message
  CHECK(npspec_khat(1.0, &v) == NPSPEC_OK);
  CHECK(std::strlen(npspec_last_error()) == 0);
}

TEST_CASE("kernel evaluators through the C surface") {
  double v1 = 0.0, v2 = 0.0;
  const double x[2] = {0.5, 0.2}, y[2] = {-0.3, 0.9};
  REQUIRE(npspec_oblate_k(1, 3.0, 1.0, x, y, &v1) == NPSPEC_OK);
  REQUIRE(npspec_oblate_k(2, 3.0, 1.0, x, y, &v2) == NPSPEC_OK);
  CHECK(v1 != v2);
  double om = 0.0;
  REQUIRE(npspec_omega_weight(3.0, 1.0, x, &om) == NPSPEC_OK);
  CHECK(om >= 1.0);
  double rk = 0.0;
  REQUIRE(npspec_oblate_radial_kernel(3.0, 1.0, 1, 2, 0.5, 1.0, &rk) == NPSPEC_OK);
  double hk = 0.0;
  REQUIRE(npspec_h_kernel(2.0, 0.3, -0.4, &hk) == NPSPEC_OK);
  CHECK(hk > 0.0);
  double pm = 0.0;
  REQUIRE(npspec_prolate_measure(1.0, 0.4, &pm) == NPSPEC_OK);
  CHECK(pm == 1.0);
}

TEST_CASE("operator and spectrum handle lifecycle") {
  npspec_operator* op = nullptr;
  REQUIRE(npspec_discretize_prolate(1.0, 96, &op) == NPSPEC_OK);
  REQUIRE(op != nullptr);
  CHECK(npspec_operator_size(op) == 96);
  CHECK(npspec_operator_asymmetry(op) < 1e-2);
  CHECK(std::string(npspec_operator_scheme(op)).size() > 0);

  npspec_spectrum* sp = nullptr;
  REQUIRE(npspec_operator_eigenvalues(op, &sp) == NPSPEC_OK);
  REQUIRE(npspec_spectrum_size(sp) == 96);
  double re = 0.0, im = 0.0;
  REQUIRE(npspec_spectrum_get(sp, 0, &re, &im) == NPSPEC_OK);
  CHECK(re == doctest::Approx(0.5).epsilon(1e-5));
  CHECK(std::abs(im) < 1e-10);
  CHECK(std::string(npspec_spectrum_label(sp, 0)) == "m=0");
  CHECK(npspec_spectrum_get(sp, 96, &re, &im) == NPSPEC_ERR_INVALID);
  CHECK(npspec_spectrum_imag_max(sp) < 1e-10);
  npspec_spectrum_free(sp);
  npspec_operator_free(op);

  // oblate handle with labels
  npspec_operator* ob = nullptr;
  REQUIRE(npspec_discretize_oblate(2.0, 1.0, 1, -1, 64, &ob) == NPSPEC_OK);
  npspec_spectrum* osp = nullptr;
  REQUIRE(npspec_operator_eigenvalues(ob, &osp) == NPSPEC_OK);
  CHECK(std::string(npspec_spectrum_label(osp, 0)) == "m=1 odd");
  npspec_spectrum_free(osp);
  npspec_operator_free(ob);

  // invalid inputs surface as status codes, not crashes
  npspec_operator* bad = nullptr;
  CHECK(npspec_discretize_prolate(0.5, 96, &bad) == NPSPEC_ERR_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(npspec_discretize_oblate(2.0, 1.0, 0, 5, 64, &bad) == NPSPEC_ERR_INVALID);
}

TEST_CASE("quasi-mode residuals through the C surface") {
  double res = 0.0, l0 = 0.0;
  REQUIRE(npspec_residual_prolate(0.3, 0.5, 100.0, 0, &res, &l0) == NPSPEC_OK);
  CHECK(res > 0.0);
  CHECK(res < 0.2);
  double sheet = 0.0, wall = 0.0, fn = 0.0;
  REQUIRE(npspec_residual_flat(-0.3, 0.3, 100.0, &sheet, &wall, &fn) == NPSPEC_OK);
  CHECK(sheet > 0.0);
  CHECK(sheet < 0.2);
  CHECK(wall > 0.0);
  CHECK(npspec_residual_prolate(-0.3, 0.5, 100.0, 0, &res, nullptr) == NPSPEC_ERR_DOMAIN);
}
