#ifndef NPSPEC_QUADRATURE_HPP
#define NPSPEC_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace npspec {

// n-point Gauss-Legendre rule on [-1,1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

const GaussRule& gauss_legendre(int n);

// Adaptive Gauss-Kronrod (7-15 pair) panel integration with bisection.
// Terminates a panel once its error estimate is below its share of abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-11, int max_panels = 4096);

// Composite panel mesh on an interval. breaks has panels+1 entries.
struct Mesh1D {
  std::vector<double> breaks;
  int q = 8;   // Gauss points per panel

  int panels() const { return static_cast<int>(breaks.size()) - 1; }
};

struct Grid1D {
  std::vector<double> x;      // nodes, ascending
  std::vector<double> w;      // plain Lebesgue weights
  std::vector<int> panel_of;  // panel index per node
  Mesh1D mesh;

  int size() const { return static_cast<int>(x.size()); }
  double panel_lo(int p) const { return mesh.breaks[p]; }
  double panel_hi(int p) const { return mesh.breaks[p + 1]; }
};

Grid1D panel_grid(const Mesh1D& mesh);

// Panel rule built in a transformed coordinate u: the mesh lives in u-space,
// nodes are mapped through x = map(u) and weights carry the Jacobian dmap(u).
// The returned mesh holds the physical (mapped) breaks. Integrands that are
// singular in x but smooth in u are integrated at full order this way.
Grid1D panel_grid_mapped(const Mesh1D& mesh_u, const std::function<double(double)>& map,
                         const std::function<double(double)>& dmap);

// Exact weights L_j for int_A^B log|c - y| l_j(y) dy, where l_j are the
// Lagrange polynomials of the given nodes inside [A,B]. Valid for c inside
// or outside the panel; the log moments have closed-form antiderivatives.
std::vector<double> log_product_weights(double A, double B, const double* nodes, int q, double c);

} // namespace npspec

#endif
