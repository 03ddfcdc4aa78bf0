#ifndef NPSPEC_PROLATE_HPP
#define NPSPEC_PROLATE_HPP

#include "npspec/types.hpp"

namespace npspec::prolate {

// Spheroidal radial coordinate L > 1 <-> aspect ratio R > 1, R = L/sqrt(L^2-1).
// The map is an involution; L -> infinity is the sphere, L -> 1 the needle.
double r_to_l(double R);
double l_to_r(double L);

struct ProlateShape {
  double L;
  double R;

  static ProlateShape from_l(double L);
  static ProlateShape from_r(double R);
};

// NP eigenvalue lambda_{m,n}(L) on the spheroid xi = L:
//   (-1/2)(-1)^m (n-m)!/(n+m)! (L^2-1) (P_n^m Q_n^m)'(L),
// with lambda_{-m,n} = lambda_{m,n}. Positive, confined to (0, 1/2].
double eigenvalue(ModeIndex mode, double L);

struct EigenvalueEx {
  double value;
  bool near_degenerate;   // L - 1 < 1e-8, logarithmic blowup regime
};
EigenvalueEx eigenvalue_ex(ModeIndex mode, double L);

// sum_{m=-n}^{n} lambda_{m,n}(L) - 1/2
double half_property_defect(int n, double L);

// Attainable values of lambda_{m,n}(L), L in (1, infinity):
// m = 0: (1/(2(2n+1)), 1/2);  m != 0: (0, 1/(2(2n+1))].
struct Range {
  double lo;
  double hi;
  bool hi_closed;
};
Range attainable_range(ModeIndex mode);

struct TuneResult {
  double L;
  double achieved;
};

// Solve eigenvalue(mode, L) = target by log-spaced bracketing + bisection.
// The map is continuous with known endpoint limits but not provably monotone,
// so this returns *a* solution. Out-of-range targets raise errc::range.
TuneResult tune_L(ModeIndex mode, double target);

// All lambda_{m,n}(L) for 1 <= n <= n_max, 0 <= m <= n, sorted descending,
// with multiplicity-2 labels for m > 0.
SpectrumResult enumerate_spectrum(double L, int n_max);

} // namespace npspec::prolate

#endif
