#ifndef NPSPEC_SPECFUN_HPP
#define NPSPEC_SPECFUN_HPP

namespace npspec::specfun {

// Associated Legendre functions on the real ray z > 1 (no branch cut there),
// normalized as (z^2-1)^{m/2} d^m/dz^m of the degree-n function. This is the
// convention in which P_m^m(z) = (2m-1)!! (z^2-1)^{m/2} carries no phase.
//
// Valid argument window is z in [1+1e-12, 1e6]; accuracy degrades to ~1e-8
// relative within 1e-8 of the singular endpoint z = 1.

double legendre_p(int n, int m, double z);

// Q uses the branch log((z+1)/(z-1)) on z > 1, i.e. Q_0(z) = atanh(1/z).
// Evaluated by forward recurrence where growth is harmless and by a
// backward (Miller) recurrence normalized at Q_0 otherwise.
double legendre_q(int n, int m, double z);

// d/dz [P_n^m(z) Q_n^m(z)] by the order-raising derivative identities,
// not finite differences.
double legendre_pq_product_derivative(int n, int m, double z);

// true when z is close enough to 1 that the logarithmic blowup degrades
// the precision of products like (L^2-1)(PQ)'(L)
bool near_singular_argument(double z);

// Modified Bessel function of the second kind, order 0 or 1, x > 0.
double bessel_k(int order, double x);

// Fourier transform of (1+t^2)^{-3/2} under the e^{-2 pi i xi t} convention:
// 4 pi |xi| K_1(2 pi |xi|), continuously extended to 2 at xi = 0.
double khat(double xi);

} // namespace npspec::specfun

#endif
