#ifndef NPSPEC_SPECTRA_HPP
#define NPSPEC_SPECTRA_HPP

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "npspec/quadrature.hpp"
#include "npspec/types.hpp"

namespace npspec::spectra {

enum class Family { prolate, oblate };

// Node distribution of the composite panel mesh.
//  trig:   prolate t = -R cos(beta), oblate s = aR sin(v); resolves the
//          square-root structure of the kernels at poles / rim analytically.
//  linear: uniform core panels with geometric end grading.
enum class GridMap { trig, linear };

struct Scheme {
  int q = 8;                   // Gauss points per panel
  GridMap map = GridMap::trig;
  int grading_levels = 6;      // geometric end-splits for GridMap::linear
  bool symmetrize = true;      // average the similarity-frame matrix with its transpose
  double quad_tol = 1e-11;

  std::string id() const;
};

struct NystromGrid {
  std::vector<double> nodes;     // parameter nodes: t in (-R,R) or s in (0,aR)
  std::vector<double> weights;   // surface-measure weights (sum ~ surface area)
  std::vector<double> base_w;    // plain Lebesgue weights of the parameter
  Mesh1D mesh;

  int size() const { return static_cast<int>(nodes.size()); }
  double domain_measure() const;
};

struct DiscreteOperator {
  NystromGrid grid;
  Eigen::MatrixXd matrix;    // Nystrom matrix, row i: quadrature at target node i
  Family family = Family::prolate;
  double R = 1.0;
  double a = 1.0;
  int m = 0;
  Parity parity = Parity::even;
  std::string scheme;
  double asymmetry = 0.0;    // max |A - A^T| of the similarity frame before symmetrization
};

NystromGrid prolate_grid(double R, int N, const Scheme& scheme = {});
NystromGrid oblate_grid(double R, double a, int N, const Scheme& scheme = {});

// Generic singularity-corrected assembly used by both families and by the
// quasi-mode residuals. The full kernel is sigma(y) * sym_kernel(x,y) with
// sym_kernel symmetric and at most log-singular on the diagonal; the log
// coefficient per row is fitted from near-diagonal values and the log part is
// product-integrated with exact moments on near panels. When symmetrize is
// set, the matrix is averaged with its transpose in the similarity frame
// diag(sqrt(w sigma)) where the exact operator is symmetric.
Eigen::MatrixXd assemble_log_kernel(const NystromGrid& grid,
                                    const std::function<double(double, double)>& sym_kernel,
                                    const std::function<double(double)>& sigma, bool symmetrize,
                                    double* asymmetry_out);

DiscreteOperator discretize_prolate(double R, int N, const Scheme& scheme = {});
DiscreteOperator discretize_oblate(double R, double a, int m, Parity parity, int N,
                                   const Scheme& scheme = {});

SpectrumResult eigenvalues(const DiscreteOperator& op);

struct CoveragePoint {
  double lambda;
  double nearest;   // distance to the closest computed eigenvalue
  bool covered;
};

struct CoverageReport {
  std::vector<CoveragePoint> points;
  bool all_covered = false;
  int eigen_count = 0;
  double eps = 0.0;
};

struct ScanOptions {
  int N = 256;
  int m_max = 8;        // oblate azimuthal truncation
  double a = 1.0;
  Scheme scheme{};
};

CoverageReport density_scan(Family family, const std::vector<double>& R_list,
                            const std::vector<double>& lambda_grid, double eps,
                            const ScanOptions& opt = {});

} // namespace npspec::spectra

#endif
