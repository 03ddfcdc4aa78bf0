#include <doctest.h>

#include <cmath>

#include "npspec/errors.hpp"
#include "npspec/specfun.hpp"
#include "oracles.hpp"

using namespace npspec;
using specfun::bessel_k;
using specfun::khat;
using specfun::legendre_p;
using specfun::legendre_pq_product_derivative;
using specfun::legendre_q;

TEST_CASE("legendre_p spot values") {
  // P_3^2(z) = 15 z (z^2 - 1)
  CHECK(legendre_p(3, 2, 1.5) == doctest::Approx(28.125).epsilon(1e-14));
  CHECK(legendre_p(1, 0, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  // P_n(1+eps) -> 1
  CHECK(legendre_p(2, 0, 1.0 + 1e-10) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(legendre_p(7, 0, 1.0 + 1e-10) == doctest::Approx(1.0).epsilon(1e-8));
  // 50-digit binomial-sum oracle
  CHECK(legendre_p(5, 3, 1.5) ==
        doctest::Approx(oracle::legendre_p_assoc(5, 3, 1.5)).epsilon(1e-12));
  CHECK(legendre_p(12, 5, 3.0) ==
        doctest::Approx(oracle::legendre_p_assoc(12, 5, 3.0)).epsilon(1e-12));
}

TEST_CASE("legendre_q spot values") {
  // n = 0: the empty sum leaves (1/2) log((z+1)/(z-1))
  for (double z : {1.2, 2.0, 17.0})
    CHECK(legendre_q(0, 0, z) == doctest::Approx(0.5 * std::log((z + 1) / (z - 1))).epsilon(1e-15));
  // Q_1(2) = log(3) - 1, by direct substitution into the half-log formula
  CHECK(legendre_q(1, 0, 2.0) == doctest::Approx(std::log(3.0) - 1.0).epsilon(1e-14));
  // frozen 50-digit evaluations of the half-log formula
  CHECK(legendre_q(2, 0, 3.0) == doctest::Approx(0.005456673639644511212).epsilon(1e-13));
  CHECK(legendre_q(2, 1, 3.0) == doctest::Approx(-0.016511473614919329585).epsilon(1e-13));
  CHECK(legendre_q(5, 0, 1.5) == doctest::Approx(0.0024668237065027457562).epsilon(1e-13));
  CHECK(legendre_q(5, 3, 1.5) == doctest::Approx(-1.0410362082000430239).epsilon(1e-13));
  // integral-representation oracle, no recurrences involved
  for (int n : {1, 4, 9, 20}) {
    for (double z : {1.01, 1.5, 2.0, 10.0, 1e4}) {
      if (z > 100.0 && n > 10) continue;   // underflow territory, checked separately
      CHECK(legendre_q(n, 0, z) ==
            doctest::Approx(oracle::legendre_q_integral(n, z)).epsilon(1e-11));
    }
  }
  CHECK(legendre_q(3, 2, 2.5) == doctest::Approx(oracle::legendre_q_assoc(3, 2, 2.5)).epsilon(1e-11));
}

TEST_CASE("legendre domain errors") {
  CHECK_THROWS_AS(legendre_p(2, 3, 1.5), error);    // m > n
  CHECK_THROWS_AS(legendre_p(2, 0, 1.0), error);    // z = 1
  CHECK_THROWS_AS(legendre_p(2, 0, 0.5), error);    // z < 1
  CHECK_THROWS_AS(legendre_q(2, 0, 1.0), error);
  CHECK_THROWS_AS(legendre_q(1, -1, 2.0), error);
  CHECK_THROWS_AS(legendre_q(2, 0, 2e6), error);    // beyond the documented window
  // blowup near z = 1 for m > 0 eventually overflows; must be flagged
  CHECK_THROWS_AS(legendre_q(50, 50, 1.0 + 1e-12), error);
}

TEST_CASE("three-term recurrence holds for P and Q") {
  for (double z : {1.01, 1.5, 2.0, 10.0}) {
    for (int n = 1; n < 20; ++n) {
      const double pm = legendre_p(n - 1, 0, z), p0 = legendre_p(n, 0, z),
                   pp = legendre_p(n + 1, 0, z);
      CHECK((2 * n + 1) * z * p0 ==
            doctest::Approx((n + 1) * pp + n * pm).epsilon(1e-10));
      const double qm = legendre_q(n - 1, 0, z), q0 = legendre_q(n, 0, z),
                   qp = legendre_q(n + 1, 0, z);
      CHECK((2 * n + 1) * z * q0 ==
            doctest::Approx((n + 1) * qp + n * qm).epsilon(1e-10));
    }
  }
}

TEST_CASE("Legendre ODE residual by finite differences") {
  // (1-z^2) y'' - 2 z y' + [n(n+1) - m^2/(1-z^2)] y = 0
  auto ode_residual = [](int n, int m, double z, auto f) {
    const double h = 1e-3 * std::max(1.0, 0.1 * (z - 1.0));
    const double fm2 = f(z - 2 * h), fm1 = f(z - h), f0 = f(z), fp1 = f(z + h), fp2 = f(z + 2 * h);
    const double d1 = (-fp2 + 8 * fp1 - 8 * fm1 + fm2) / (12 * h);
    const double d2 = (-fp2 + 16 * fp1 - 30 * f0 + 16 * fm1 - fm2) / (12 * h * h);
    const double coef = n * (n + 1.0) - m * m / (1.0 - z * z);
    const double res = (1.0 - z * z) * d2 - 2.0 * z * d1 + coef * f0;
    const double scale =
        std::abs((1.0 - z * z) * d2) + std::abs(2.0 * z * d1) + std::abs(coef * f0) + 1e-300;
    return std::abs(res) / scale;
  };
  for (double z : {1.5, 2.0, 10.0}) {
    for (auto [n, m] : {std::pair{3, 0}, {5, 2}, {8, 1}, {12, 7}}) {
      CHECK(ode_residual(n, m, z, [&](double x) { return legendre_p(n, m, x); }) < 1e-6);
      CHECK(ode_residual(n, m, z, [&](double x) { return legendre_q(n, m, x); }) < 1e-6);
    }
  }
}

TEST_CASE("product derivative: analytic route vs frozen and finite differences") {
  // symbolic: P_1 Q_1 = z^2 atanh(1/z) - z, d/dz = 2z atanh(1/z) - z^2/(z^2-1) - 1
  const double want1 = 2 * 2.0 * std::atanh(0.5) - 4.0 / 3.0 - 1.0;
  CHECK(legendre_pq_product_derivative(1, 0, 2.0) == doctest::Approx(want1).epsilon(1e-13));
  CHECK(legendre_pq_product_derivative(1, 0, 2.0) ==
        doctest::Approx(-0.13610875599711395054).epsilon(1e-13));
  CHECK(legendre_pq_product_derivative(2, 0, 10.0) ==
        doctest::Approx(-0.0020318623530517985429).epsilon(1e-13));
  CHECK(legendre_pq_product_derivative(2, 1, 3.0) ==
        doctest::Approx(0.15455587701489702251).epsilon(1e-13));

  // central differences of legendre_p * legendre_q as an independent route
  for (auto [n, m, z] : {std::tuple{2, 0, 10.0}, {4, 2, 1.7}, {6, 0, 2.0}}) {
    const double h = 1e-6;
    auto pq = [&](double x) { return legendre_p(n, m, x) * legendre_q(n, m, x); };
    const double fd = (pq(z + h) - pq(z - h)) / (2 * h);
    CHECK(legendre_pq_product_derivative(n, m, z) == doctest::Approx(fd).epsilon(1e-7));
  }

  // near z = 1 the derivative behaves like 1/(2(1-L)) for m = 0
  for (double L : {1.0 + 1e-4, 1.0 + 1e-5, 1.0 + 1e-6}) {
    const double d = legendre_pq_product_derivative(3, 0, L);
    const double lead = 1.0 / (2.0 * (1.0 - L));
    CHECK(std::abs(d - lead) < 30.0 * std::abs(std::log(L - 1.0)));
  }
  CHECK(specfun::near_singular_argument(1.0 + 1e-9));
  CHECK(!specfun::near_singular_argument(1.5));
}

TEST_CASE("bessel_k values and identities") {
  CHECK(bessel_k(0, 1.0) == doctest::Approx(0.42102443824070833334).epsilon(1e-14));
  CHECK(bessel_k(1, 1.0) == doctest::Approx(0.60190723019723457474).epsilon(1e-14));
  // x K_1(x) -> 1 as x -> 0+
  CHECK(1e-6 * bessel_k(1, 1e-6) == doctest::Approx(1.0).epsilon(1e-9));
  // (x K_1(x))' = -x K_0(x)
  for (double x : {0.3, 1.0, 2.5, 7.0}) {
    const double h = 1e-6 * x;
    const double lhs = ((x + h) * bessel_k(1, x + h) - (x - h) * bessel_k(1, x - h)) / (2 * h);
    CHECK(lhs == doctest::Approx(-x * bessel_k(0, x)).epsilon(1e-7));
  }
  CHECK_THROWS_AS(bessel_k(0, 0.0), error);
  CHECK_THROWS_AS(bessel_k(0, -1.0), error);
  CHECK_THROWS_AS(bessel_k(2, 1.0), error);
}

TEST_CASE("khat: value, symmetry, monotonicity, decay") {
  CHECK(khat(0.0) == 2.0);
  CHECK(khat(0.5) == doctest::Approx(0.21308482438710179714).epsilon(1e-14));
  CHECK(khat(2.0) == doctest::Approx(3.1890878200114633e-05).epsilon(1e-12));
  for (double xi : {0.1, 0.7, 2.0, 5.0}) CHECK(khat(xi) == khat(-xi));
  double prev = khat(0.0);
  for (double xi = 0.05; xi <= 3.0; xi += 0.05) {
    const double v = khat(xi);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
  CHECK(khat(5.0) / khat(1.0) < 1e-9);
}

TEST_CASE("khat equals the direct transform of (1+t^2)^{-3/2}") {
  // adaptive windowed quadrature of 2 int_0^inf cos(2 pi xi t) k(t) dt
  auto k = [](double t) { return std::pow(1.0 + t * t, -1.5); };
  for (double xi : {0.1, 0.25, 0.5, 1.0, 2.0, 5.0}) {
    const double T = std::max(60.0, 40.0 / xi);
    const double direct = oracle::windowed_cos_transform(k, xi, T);
    CHECK(khat(xi) == doctest::Approx(direct).epsilon(5e-9));
  }
}
