#include "npspec/limit_ops.hpp"

#include <cmath>
#include <string>

#include "npspec/errors.hpp"
#include "npspec/quadrature.hpp"
#include "npspec/specfun.hpp"

namespace npspec::limit_ops {

namespace {
constexpr double kQuadTol = 1e-12;
constexpr double kXiCap = 1e4;

double check_unit_interval_lambda(double lambda, const char* who) {
  if (!(lambda > 0.0 && lambda <= 0.5))
    raise(errc::domain, std::string(who) + ": lambda must lie in (0, 1/2], got " +
                            std::to_string(lambda));
  return lambda;
}
} // namespace

double l0_kernel(double t) {
  if (t == 0.0) raise(errc::singular, "l0_kernel: logarithmic singularity at t = 0");
  const double t2 = t * t;
  // theta in [0, pi/2] under u = sin(theta/2): 1-cos = 2u^2, measure 2/sqrt(1-u^2)
  const double near = integrate(
      [&](double u) {
        const double u2 = u * u;
        return 2.0 * u2 / std::pow(4.0 * u2 + t2, 1.5) * 2.0 / std::sqrt(1.0 - u2);
      },
      0.0, M_SQRT1_2, kQuadTol);
  const double far = integrate(
      [&](double th) {
        const double c = std::cos(th);
        return (1.0 - c) / std::pow((2.0 - 2.0 * c) + t2, 1.5);
      },
      M_PI / 2.0, M_PI, kQuadTol);
  return (near + far) / (2.0 * M_PI);
}

double l0_hat(double xi) {
  const double a = std::abs(xi);
  auto f = [&](double th) { return specfun::khat(2.0 * std::sin(0.5 * th) * a); };
  // khat decays like e^{-2 pi u}; for large xi the integrand collapses into a
  // spike of width ~ 1/xi that a blind panel split would step over
  if (a <= 4.0) return integrate(f, 0.0, M_PI, kQuadTol) / (4.0 * M_PI);
  const double cut = std::min(0.5 * M_PI, 14.0 / a);
  return (integrate(f, 0.0, cut, kQuadTol) + integrate(f, cut, M_PI, kQuadTol)) / (4.0 * M_PI);
}

Xi0Result solve_xi0_prolate(double lambda) {
  check_unit_interval_lambda(lambda, "solve_xi0_prolate");
  if (lambda >= 0.5) return {0.0, false};
  if (l0_hat(kXiCap) > lambda) return {kXiCap, true};
  double lo = 0.0, hi = kXiCap;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = l0_hat(mid);
    if (std::abs(v - lambda) < 1e-11) return {mid, false};
    (v > lambda ? lo : hi) = mid;
    if (hi - lo < 1e-13 * (1.0 + hi)) break;
  }
  return {0.5 * (lo + hi), false};
}

double poisson_kernel(double t, const Vec2& x) {
  if (!(t > 0.0)) raise(errc::domain, "poisson_kernel: height t must be positive");
  const double r2 = x[0] * x[0] + x[1] * x[1];
  return t / (2.0 * M_PI * std::pow(r2 + t * t, 1.5));
}

double poisson_hat(double t, const Vec2& xi) {
  if (!(t > 0.0)) raise(errc::domain, "poisson_hat: height t must be positive");
  return std::exp(-2.0 * M_PI * t * std::hypot(xi[0], xi[1]));
}

double solve_xi0_flat(double lambda) {
  check_unit_interval_lambda(lambda, "solve_xi0_flat");
  return -std::log(2.0 * lambda) / (4.0 * M_PI);
}

double two_sheet_symbol(const Vec2& xi, Parity parity) {
  const double v = 0.5 * std::exp(-4.0 * M_PI * std::hypot(xi[0], xi[1]));
  return parity == Parity::even ? v : -v;
}

} // namespace npspec::limit_ops
