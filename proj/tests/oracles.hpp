#ifndef NPSPEC_TESTS_ORACLES_HPP
#define NPSPEC_TESTS_ORACLES_HPP

// Independent reference implementations used only by the tests. These follow
// different algorithmic routes than the library (closed-form sums in
// 50-digit arithmetic, integral representations, direct oscillatory
// transforms, the raw 3-D double-layer kernel) so that agreement is evidence,
// not tautology.

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "npspec/quadrature.hpp"
#include "npspec/types.hpp"

namespace oracle {

using mpf = boost::multiprecision::cpp_bin_float_50;

// P_n as the explicit binomial sum 2^{-n} sum_k C(n,k)^2 (z-1)^{n-k} (z+1)^k.
inline mpf legendre_p_sum(int n, const mpf& z) {
  mpf acc = 0;
  mpf binom = 1;   // C(n,0)
  for (int k = 0; k <= n; ++k) {
    acc += binom * binom * pow(z - 1, n - k) * pow(z + 1, k);
    binom = binom * (n - k) / (k + 1);
  }
  return acc / pow(mpf(2), n);
}

// Q_n from the explicit half-log formula; the catastrophic cancellation that
// makes this unusable in doubles is harmless at 50 digits.
inline mpf legendre_q_formula(int n, const mpf& z) {
  mpf sum = 0;
  for (int m = 1; m <= n; ++m)
    sum += legendre_p_sum(m - 1, z) * legendre_p_sum(n - m, z) / m;
  return legendre_p_sum(n, z) / 2 * log((z + 1) / (z - 1)) - sum;
}

// m-th derivative by iterated central differences in 50-digit arithmetic.
// Truncation error ~ m h^2; the 50-digit headroom keeps the subtractive
// roundoff ~ 1e-50/h^m negligible for the small orders used here (m <= 5).
template <typename F>
mpf mp_derivative(F f, const mpf& z, int order, const mpf& h = mpf("1e-5")) {
  if (order == 0) return f(z);
  auto g = [&](const mpf& x) { return mp_derivative(f, x, order - 1, h); };
  return (g(z + h) - g(z - h)) / (2 * h);
}

// type-3 associated functions (z^2-1)^{m/2} d^m/dz^m applied to the sums above
inline double legendre_p_assoc(int n, int m, double z) {
  const mpf zz = z;
  const mpf d = mp_derivative([n](const mpf& x) { return legendre_p_sum(n, x); }, zz, m);
  return static_cast<double>(pow(zz * zz - 1, mpf(m) / 2) * d);
}

inline double legendre_q_assoc(int n, int m, double z) {
  const mpf zz = z;
  const mpf d = mp_derivative([n](const mpf& x) { return legendre_q_formula(n, x); }, zz, m);
  return static_cast<double>(pow(zz * zz - 1, mpf(m) / 2) * d);
}

inline double legendre_pq_deriv(int n, int m, double z) {
  const mpf zz = z;
  auto pq = [n, m](const mpf& x) {
    const mpf p = mp_derivative([n](const mpf& y) { return legendre_p_sum(n, y); }, x, m);
    const mpf q = mp_derivative([n](const mpf& y) { return legendre_q_formula(n, y); }, x, m);
    return pow(x * x - 1, mpf(m)) * p * q;   // (P^m Q^m) = (z^2-1)^m D^m P D^m Q
  };
  return static_cast<double>(mp_derivative(pq, zz, 1, mpf("1e-5")));
}

// Q_n through the integral representation int_0^inf (z + sqrt(z^2-1) cosh t)^{-n-1} dt,
// a route with no recurrences at all.
inline double legendre_q_integral(int n, double z) {
  const double s = std::sqrt(z * z - 1.0);
  const double T = 45.0 / (n + 1) + 20.0;
  return npspec::integrate(
      [&](double t) { return std::pow(z + s * std::cosh(t), -(n + 1.0)); }, 0.0, T, 1e-14);
}

// C-infinity window equal to 1 on [0, T/2], 0 at T.
inline double smooth_window(double t, double T) {
  const double u = 2.0 * (1.0 - t / T);
  if (u <= 0.0) return 0.0;
  if (u >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / u), b = std::exp(-1.0 / (1.0 - u));
  return a / (a + b);
}

// Direct windowed transform 2 int_0^T cos(2 pi xi t) f(t) w(t) dt. With a
// C-infinity window the omitted tail decays faster than any power of xi T.
template <typename F>
double windowed_cos_transform(F f, double xi, double T, double tol = 1e-11) {
  return 2.0 * npspec::integrate(
                   [&](double t) {
                     return std::cos(2.0 * M_PI * xi * t) * f(t) * smooth_window(t, T);
                   },
                   0.0, T, tol, 16384);
}

// Raw 3-D double-layer kernel <Y-X, nu(Y)>/(4 pi |X-Y|^3) with the two-sheet
// parametrization, nu(Y) dS(Y) = (y1/((aR)^2 g), y2/((aR)^2 g), +-1) dy.
// X is on the upper sheet; sheet = +1 (same sheet) or -1 (lower sheet).
inline double double_layer_sheet(double R, double a, const npspec::Vec2& x,
                                 const npspec::Vec2& y, int sheet) {
  const double rim2 = (a * R) * (a * R);
  const double gx = std::sqrt(1.0 - (x[0] * x[0] + x[1] * x[1]) / rim2);
  const double gy = std::sqrt(1.0 - (y[0] * y[0] + y[1] * y[1]) / rim2);
  const double X[3] = {x[0], x[1], gx};
  const double Y[3] = {y[0], y[1], sheet * gy};
  const double nu[3] = {y[0] / (rim2 * gy), y[1] / (rim2 * gy), static_cast<double>(sheet)};
  const double d[3] = {Y[0] - X[0], Y[1] - X[1], Y[2] - X[2]};
  const double dist2 = d[0] * d[0] + d[1] * d[1] + d[2] * d[2];
  const double dot = d[0] * nu[0] + d[1] * nu[1] + d[2] * nu[2];
  return dot / (4.0 * M_PI * std::pow(dist2, 1.5));
}

// deterministic pseudo-random stream for property-style sampling
struct SplitMix64 {
  uint64_t s;
  explicit SplitMix64(uint64_t seed) : s(seed) {}
  uint64_t next() {
    uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (next() >> 11) * 0x1.0p-53;
  }
};

} // namespace oracle

#endif
