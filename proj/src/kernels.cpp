#include "npspec/kernels.hpp"

#include <cmath>
#include <string>

#include "npspec/errors.hpp"
#include "npspec/fft.hpp"
#include "npspec/quadrature.hpp"

namespace npspec::kernels {

namespace {
constexpr double kQuadTol = 1e-11;
} // namespace

double ProlateProfile::eta(double t) const {
  return std::sqrt((1.0 - t / R) * (1.0 + t / R));
}

double ProlateProfile::measure(double t) const { return prolate_measure(R, t); }

double prolate_measure(double R, double t) {
  if (!(R >= 1.0)) raise(errc::domain, "prolate_measure: R must be >= 1");
  if (!(std::abs(t) < R)) raise(errc::domain, "prolate_measure: |t| must be < R");
  const double u = t / R;
  return std::sqrt(1.0 - u * u + u * u / (R * R));
}

double h_kernel(double R, double x3, double y3) {
  if (!(R >= 1.0)) raise(errc::domain, "h_kernel: R must be >= 1");
  if (!(std::abs(x3) < R && std::abs(y3) < R))
    raise(errc::domain, "h_kernel: arguments must lie in (-R, R)");
  if (x3 == y3) raise(errc::singular, "h_kernel: logarithmic singularity on the diagonal");

  const ProlateProfile pr{R};
  const double ex = pr.eta(x3), ey = pr.eta(y3);
  const double d2 = (x3 - y3) * (x3 - y3);
  // numerator  (1 - x3 y3/R^2) - ex ey cos(th) = A + B u^2 with u = sin(th/2)
  // denominator (ex-ey)^2 + d2 + 2 B u^2
  const double A = 1.0 - x3 * y3 / (R * R) - ex * ey;
  const double B = 2.0 * ex * ey;
  const double C = (ex - ey) * (ex - ey) + d2;

  const double near = integrate(
      [&](double u) {
        const double u2 = u * u;
        return (A + B * u2) / std::pow(C + 2.0 * B * u2, 1.5) * 2.0 / std::sqrt(1.0 - u2);
      },
      0.0, M_SQRT1_2, kQuadTol);
  const double far = integrate(
      [&](double th) {
        const double c = std::cos(th);
        const double num = 1.0 - x3 * y3 / (R * R) - ex * ey * c;
        const double den = ex * ex + ey * ey - 2.0 * ex * ey * c + d2;
        return num / std::pow(den, 1.5);
      },
      M_PI / 2.0, M_PI, kQuadTol);
  return (near + far) / (2.0 * M_PI);
}

double OblateSpheroid::gamma(double s) const {
  const double u = s / rim();
  return std::sqrt((1.0 - u) * (1.0 + u));
}

double OblateSpheroid::gamma(const Vec2& x) const { return gamma(std::hypot(x[0], x[1])); }

namespace {

void check_oblate(double R, double a, const char* who) {
  if (!(R > 0.0 && a > 0.0)) raise(errc::domain, std::string(who) + ": need R > 0 and a > 0");
}

struct OblatePair {
  double dot_term;   // x.y / (a^2 R^2)
  double dist2;      // |x-y|^2
  double gx, gy;
};

double k1_from_parts(const OblatePair& p) {
  // gamma(y) K^1 = -(1/4pi) [x.y/(a^2R^2) + gx gy - 1] / [|x-y|^2 + (gx-gy)^2]^{3/2}
  const double num = p.dot_term + p.gx * p.gy - 1.0;
  const double den = p.dist2 + (p.gx - p.gy) * (p.gx - p.gy);
  return -num / (4.0 * M_PI * std::pow(den, 1.5));
}

double k2_from_parts(const OblatePair& p) {
  const double num = p.dot_term - p.gx * p.gy - 1.0;
  const double den = p.dist2 + (p.gx + p.gy) * (p.gx + p.gy);
  return -num / (4.0 * M_PI * std::pow(den, 1.5));
}

} // namespace

double oblate_k1(double R, double a, const Vec2& x, const Vec2& y) {
  check_oblate(R, a, "oblate_k1");
  const OblateSpheroid ob{R, a};
  const double gy = ob.gamma(y);
  if (!(gy > 0.0)) raise(errc::singular, "oblate_k1: gamma(y) = 0, surface weight singular");
  if (x == y) raise(errc::singular, "oblate_k1: kernel singular on the diagonal");
  const double dx0 = x[0] - y[0], dx1 = x[1] - y[1];
  const OblatePair p{(x[0] * y[0] + x[1] * y[1]) / (a * a * R * R), dx0 * dx0 + dx1 * dx1,
                     ob.gamma(x), gy};
  return k1_from_parts(p) / gy;
}

double oblate_k2(double R, double a, const Vec2& x, const Vec2& y) {
  check_oblate(R, a, "oblate_k2");
  const OblateSpheroid ob{R, a};
  const double gy = ob.gamma(y);
  if (!(gy > 0.0)) raise(errc::singular, "oblate_k2: gamma(y) = 0, surface weight singular");
  const double dx0 = x[0] - y[0], dx1 = x[1] - y[1];
  const OblatePair p{(x[0] * y[0] + x[1] * y[1]) / (a * a * R * R), dx0 * dx0 + dx1 * dx1,
                     ob.gamma(x), gy};
  return k2_from_parts(p) / gy;
}

double omega_weight(double R, double a, const Vec2& x) {
  check_oblate(R, a, "omega_weight");
  const OblateSpheroid ob{R, a};
  const double g = ob.gamma(x);
  if (!(g > 0.0)) raise(errc::singular, "omega_weight: infinite weight at the rim");
  const double rr = ob.rim() * ob.rim();
  return std::sqrt((x[0] * x[0] + x[1] * x[1]) / (rr * rr) + g * g) / g;
}

double oblate_reduced_symkernel(double R, double a, int m, int j, double r, double s) {
  check_oblate(R, a, "oblate_reduced_symkernel");
  if (j != 1 && j != 2) raise(errc::domain, "oblate_reduced_symkernel: j must be 1 or 2");
  if (m < 0) raise(errc::domain, "oblate_reduced_symkernel: m must be >= 0");
  const OblateSpheroid ob{R, a};
  if (!(r >= 0.0 && r < ob.rim() && s >= 0.0 && s < ob.rim()))
    raise(errc::domain, "oblate_reduced_symkernel: radii must lie in [0, aR)");
  if (j == 1 && r == s)
    raise(errc::singular, "oblate_reduced_symkernel: diagonal of the same-sheet kernel");

  const double gr = ob.gamma(r), gs = ob.gamma(s);
  const double a2R2 = a * a * R * R;
  const double gg = gr * gs;
  const double dd = (j == 1) ? (gr - gs) * (gr - gs) : (gr + gs) * (gr + gs);
  const double sign_gg = (j == 1) ? 1.0 : -1.0;

  auto integrand_of_cos = [&](double ca) {
    const double num = r * s * ca / a2R2 + sign_gg * gg - 1.0;
    const double den = (r - s) * (r - s) + 2.0 * r * s * (1.0 - ca) + dd;
    return -num / (4.0 * M_PI * std::pow(den, 1.5));
  };

  // alpha in [0, pi/2] under v = sin(alpha/2); [pi/2, pi] directly
  const double near = integrate(
      [&](double v) {
        const double ca = 1.0 - 2.0 * v * v;
        const double alpha = 2.0 * std::asin(v);
        return integrand_of_cos(ca) * std::cos(m * alpha) * 2.0 / std::sqrt(1.0 - v * v);
      },
      0.0, M_SQRT1_2, kQuadTol);
  const double far = integrate(
      [&](double alpha) { return integrand_of_cos(std::cos(alpha)) * std::cos(m * alpha); },
      M_PI / 2.0, M_PI, kQuadTol);
  return 2.0 * (near + far);
}

double oblate_radial_kernel(double R, double a, int m, int j, double r, double s) {
  const OblateSpheroid ob{R, a};
  const double gs = ob.gamma(s);
  if (!(gs > 0.0)) raise(errc::singular, "oblate_radial_kernel: gamma(s) = 0 at the rim");
  return s * oblate_reduced_symkernel(R, a, m, j, r, s) / gs;
}

SheetPair flat_sheet_apply(const Grid2D& phi_plus, const Grid2D& phi_minus) {
  if (phi_plus.n != phi_minus.n || phi_plus.dx != phi_minus.dx)
    raise(errc::domain, "flat_sheet_apply: sheet grids must agree");
  const int n = phi_plus.n;
  const double dx = phi_plus.dx;
  if (n < 4 || !(dx > 0.0)) raise(errc::domain, "flat_sheet_apply: malformed grid");

  // support must stay well inside the box, else the cyclic convolution wraps
  // the slowly decaying Poisson tail back into the result
  auto check_support = [&](const Grid2D& g, const char* who) {
    double peak = 0.0;
    for (const auto& z : g.v) peak = std::max(peak, std::abs(z));
    if (peak == 0.0) return;
    const double lim = 0.375 * n * dx;
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (std::abs(g.at(i, k)) > 1e-9 * peak &&
            (std::abs(g.coord(i)) > lim || std::abs(g.coord(k)) > lim))
          raise(errc::aliasing,
                std::string(who) + ": density support leaks into the outer quarter of the grid");
  };
  check_support(phi_plus, "flat_sheet_apply");
  check_support(phi_minus, "flat_sheet_apply");

  auto convolve = [&](const Grid2D& g) {
    Grid2D out = g;
    dft2(out, -1);
    for (int i = 0; i < n; ++i) {
      const double xi1 = dft_freq(i, n, dx);
      for (int k = 0; k < n; ++k) {
        const double xi2 = dft_freq(k, n, dx);
        const double sym = 0.5 * std::exp(-4.0 * M_PI * std::hypot(xi1, xi2));
        out.at(i, k) *= sym / (static_cast<double>(n) * n);   // inverse-DFT normalization
      }
    }
    dft2(out, +1);
    return out;
  };

  return SheetPair{convolve(phi_minus), convolve(phi_plus)};
}

} // namespace npspec::kernels
