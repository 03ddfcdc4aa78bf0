#ifndef NPSPEC_LIMIT_OPS_HPP
#define NPSPEC_LIMIT_OPS_HPP

#include "npspec/types.hpp"

namespace npspec::limit_ops {

// Thin-needle limit kernel
//   L0(t) = (1/2pi) int_0^pi (1-cos th) / [(2-2cos th) + t^2]^{3/2} dth,
// logarithmically divergent at t = 0.
double l0_kernel(double t);

// Its Fourier symbol, (1/4pi) int_0^pi khat(2 sin(th/2) xi) dth.
// Even, positive, strictly decreasing on xi >= 0, maximum 1/2 at xi = 0.
double l0_hat(double xi);

struct Xi0Result {
  double value = 0.0;
  bool capped = false;   // lambda below l0_hat at the search cap xi = 1e4
};

// Unique xi0 >= 0 with l0_hat(xi0) = lambda, lambda in (0, 1/2].
Xi0Result solve_xi0_prolate(double lambda);

// Poisson kernel on the plane at height t > 0 and its symbol exp(-2 pi t |xi|).
double poisson_kernel(double t, const Vec2& x);
double poisson_hat(double t, const Vec2& xi);

// Closed form |xi0| = -log(2 lambda)/(4 pi) for lambda in (0, 1/2]; the
// direction is fixed along the first axis by convention.
double solve_xi0_flat(double lambda);

// Symbol of the flat two-sheet limit on symmetric/antisymmetric densities:
// +-(1/2) exp(-4 pi |xi|).
double two_sheet_symbol(const Vec2& xi, Parity parity);

} // namespace npspec::limit_ops

#endif
