#include "npspec/specfun.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>

#include "npspec/errors.hpp"

namespace npspec::specfun {

namespace {

constexpr double kZmin = 1.0 + 1e-12;
constexpr double kZmax = 1e6;

void check_z(double z, const char* who) {
  if (!(z >= kZmin && z <= kZmax))
    raise(errc::domain, std::string(who) + ": argument must lie in [1+1e-12, 1e6], got " +
                            std::to_string(z));
}

void check_finite(double v, const char* who) {
  if (!std::isfinite(v))
    raise(errc::overflow, std::string(who) + ": value not representable in double");
}

// P_n^m with m allowed up to n+1 (P_n^{n+1} = 0), needed by the derivative
// identities. Upward degree recurrence from the P_m^m seed is stable on z > 1.
double legendre_p_ext(int n, int m, double z) {
  if (m > n) return 0.0;
  const double s = std::sqrt((z - 1.0) * (z + 1.0));
  double pmm = 1.0;
  for (int k = 1; k <= m; ++k) pmm *= (2 * k - 1) * s;
  if (n == m) return pmm;
  double pkm1 = pmm;
  double pk = (2 * m + 1) * z * pmm;
  for (int k = m + 1; k < n; ++k) {
    const double pk1 = ((2 * k + 1) * z * pk - (k + m) * pkm1) / (k - m + 1);
    pkm1 = pk;
    pk = pk1;
  }
  return pk;
}

// Q_0 .. Q_n. Forward recurrence amplifies the dominant solution P by
// (z+sqrt(z^2-1))^{2n}, so it is used only where that factor is small;
// otherwise a downward Miller pass normalized at Q_0 = atanh(1/z).
std::vector<double> legendre_q_seq(int n, double z) {
  const double q0 = std::atanh(1.0 / z);
  std::vector<double> q(n + 1);
  q[0] = q0;
  if (n == 0) return q;

  const double big = z + std::sqrt((z - 1.0) * (z + 1.0));
  const double digits_lost = 2.0 * n * std::log10(big);

  if (digits_lost < 2.5) {
    q[1] = z * q0 - 1.0;
    for (int k = 1; k < n; ++k) q[k + 1] = ((2 * k + 1) * z * q[k] - k * q[k - 1]) / (k + 1);
    return q;
  }

  const int extra = static_cast<int>(std::ceil(18.0 / (2.0 * std::log10(big)))) + 6;
  const int N = n + extra;
  std::vector<double> y(N + 2);
  y[N + 1] = 0.0;
  y[N] = 1.0;
  for (int k = N; k >= 1; --k) {
    y[k - 1] = ((2 * k + 1) * z * y[k] - (k + 1) * y[k + 1]) / k;
    if (std::abs(y[k - 1]) > 1e280) {
      for (int j = k - 1; j <= N + 1; ++j) y[j] *= 1e-280;
    }
  }
  const double scale = q0 / y[0];
  for (int k = 0; k <= n; ++k) q[k] = y[k] * scale;
  return q;
}

// (z^2-1) dQ_n/dz = n (z Q_n - Q_{n-1});  Q_0' = -1/(z^2-1).
double legendre_q_deriv(int n, double z, const std::vector<double>& q) {
  if (n == 0) return -1.0 / ((z - 1.0) * (z + 1.0));
  return n * (z * q[n] - q[n - 1]) / ((z - 1.0) * (z + 1.0));
}

// Raise order via F^{j} = (n-j+2)(n+j-1) F^{j-2} - 2(j-1) z (z^2-1)^{-1/2} F^{j-1},
// starting from F^0 = Q_n and F^1 = sqrt(z^2-1) Q_n'. All terms share the
// (-1)^j sign pattern so the recurrence does not cancel.
double legendre_q_ext(int n, int m, double z) {
  const auto q = legendre_q_seq(n, z);
  if (m == 0) return q[n];
  const double s = std::sqrt((z - 1.0) * (z + 1.0));
  double fm2 = q[n];
  double fm1 = s * legendre_q_deriv(n, z, q);
  if (m == 1) return fm1;
  double f = 0.0;
  for (int j = 2; j <= m; ++j) {
    f = (n - j + 2.0) * (n + j - 1.0) * fm2 - 2.0 * (j - 1.0) * z / s * fm1;
    fm2 = fm1;
    fm1 = f;
  }
  return f;
}

void check_mode(int n, int m, const char* who) {
  if (n < 0 || m < 0 || m > n)
    raise(errc::domain, std::string(who) + ": need 0 <= m <= n, got n=" + std::to_string(n) +
                            " m=" + std::to_string(m));
}

} // namespace

bool near_singular_argument(double z) { return z - 1.0 < 1e-8; }

double legendre_p(int n, int m, double z) {
  check_mode(n, m, "legendre_p");
  check_z(z, "legendre_p");
  const double v = legendre_p_ext(n, m, z);
  check_finite(v, "legendre_p");
  return v;
}

double legendre_q(int n, int m, double z) {
  check_mode(n, m, "legendre_q");
  check_z(z, "legendre_q");
  const double v = legendre_q_ext(n, m, z);
  check_finite(v, "legendre_q");
  if (v == 0.0)
    raise(errc::overflow, "legendre_q: value underflowed to zero (argument too large for this order)");
  return v;
}

double legendre_pq_product_derivative(int n, int m, double z) {
  check_mode(n, m, "legendre_pq_product_derivative");
  check_z(z, "legendre_pq_product_derivative");
  // (z^2-1) d/dz F^m = m z F^m + sqrt(z^2-1) F^{m+1}, applied to both factors:
  // (PQ)' = [2 m z P^m Q^m + s (P^{m+1} Q^m + P^m Q^{m+1})] / (z^2-1)
  const double s = std::sqrt((z - 1.0) * (z + 1.0));
  const double pm = legendre_p_ext(n, m, z);
  const double pm1 = legendre_p_ext(n, m + 1, z);
  const double qm = legendre_q_ext(n, m, z);
  const double qm1 = legendre_q_ext(n, m + 1, z);
  const double v = (2.0 * m * z * pm * qm + s * (pm1 * qm + pm * qm1)) / ((z - 1.0) * (z + 1.0));
  check_finite(v, "legendre_pq_product_derivative");
  return v;
}

double bessel_k(int order, double x) {
  if (order != 0 && order != 1) raise(errc::domain, "bessel_k: order must be 0 or 1");
  if (!(x > 0.0)) raise(errc::domain, "bessel_k: argument must be positive");
  if (x > 740.0) return 0.0;   // below double underflow; exact enough for every caller
  return boost::math::cyl_bessel_k(order, x);
}

double khat(double xi) {
  const double a = std::abs(xi);
  if (a == 0.0) return 2.0;
  const double t = 2.0 * M_PI * a;
  if (t > 740.0) return 0.0;
  return 2.0 * t * boost::math::cyl_bessel_k(1, t);
}

} // namespace npspec::specfun
