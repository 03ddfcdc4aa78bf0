#ifndef NPSPEC_KERNELS_HPP
#define NPSPEC_KERNELS_HPP

#include "npspec/types.hpp"

namespace npspec::kernels {

// Prolate spheroid x1^2 + x2^2 + x3^2/R^2 < 1, profile eta(t) = sqrt(1-t^2/R^2).
struct ProlateProfile {
  double R = 1.0;

  double eta(double t) const;        // 0 < eta <= 1 on (-R, R)
  double measure(double t) const;    // dS = measure(y3) dphi dy3
};

// Azimuthally reduced NP kernel on the prolate spheroid; the surface measure
// is already absorbed, so the operator acts with plain dy3 and the kernel is
// symmetric in (x3, y3). Logarithmic singularity on the diagonal.
double h_kernel(double R, double x3, double y3);

double prolate_measure(double R, double t);

// Oblate spheroid x1^2/(aR)^2 + x2^2/(aR)^2 + x3^2 < 1 (equal semi-axes).
struct OblateSpheroid {
  double R = 1.0;
  double a = 1.0;

  double rim() const { return a * R; }
  double gamma(double s) const;           // sqrt(1 - s^2/(aR)^2), radial
  double gamma(const Vec2& x) const;
};

// Same-sheet (j = 1) and cross-sheet (j = 2) kernels of the NP operator
// written against plain planar measure dy on the disk of radius aR.
double oblate_k1(double R, double a, const Vec2& x, const Vec2& y);
double oblate_k2(double R, double a, const Vec2& x, const Vec2& y);

// Surface density dS = omega dx on each sheet; blows up like 1/gamma at the rim.
double omega_weight(double R, double a, const Vec2& x);

// Azimuthal reduction: kernel of the mode-m operator on densities f(s) e^{im phi},
//   s * int_0^{2pi} K^j((r,0),(s cos a, s sin a)) cos(m a) da.
// Near-diagonal (j=1, r ~ s) evaluation is allowed but log-singular at r = s.
double oblate_radial_kernel(double R, double a, int m, int j, double r, double s);

// gamma(y) K^j(x,y) is symmetric in (x,y); this is its azimuthal reduction
//   C_m^j(r,s) = int_0^{2pi} gamma(y) K^j((r,0),(s cos a, s sin a)) cos(m a) da,
// the building block of the exactly symmetrizable Nystrom assembly.
double oblate_reduced_symkernel(double R, double a, int m, int j, double r, double s);

// Flat two-sheet application: each sheet sees the Poisson convolution of the
// opposite sheet, upper = (1/2) P_2 * phi_minus, lower = (1/2) P_2 * phi_plus.
// FFT with the analytic symbol exp(-4 pi |xi|)/2; both grids must agree.
struct SheetPair {
  Grid2D upper;
  Grid2D lower;
};
SheetPair flat_sheet_apply(const Grid2D& phi_plus, const Grid2D& phi_minus);

} // namespace npspec::kernels

#endif
