#ifndef NPSPEC_QUASIMODE_HPP
#define NPSPEC_QUASIMODE_HPP

#include <complex>
#include <memory>
#include <vector>

#include "npspec/quadrature.hpp"
#include "npspec/types.hpp"

namespace npspec::quasimode {

// Smooth compactly supported profiles: a frequency-side bump
//   zeta_hat(xi) ~ exp(-1/(1-|xi|^2)) on |xi| < 1, normalized to unit mass,
// and the matching physical-space cutoff chi (1 on r <= support/2, 0 beyond
// support). dim selects the 1-D or planar-radial versions.
class ProfilePair {
public:
  ProfilePair(int dim, double support);

  int dim() const { return dim_; }
  double support() const { return support_; }

  double zeta_hat(double r) const;
  double zeta(double r) const;        // inverse transform, radial argument
  double chi(double r) const;
  double chi_zeta(double r) const;

private:
  double zeta_quad(double r) const;   // direct quadrature evaluation

  int dim_;
  double support_;
  double mass_;                        // normalization of the frequency bump
  std::shared_ptr<std::vector<double>> table_;   // zeta on [0, support], uniform
};

ProfilePair build_profiles(int dim = 1, double support = 1.0);

enum class Family3 { prolate, oblate, flat };

struct QuasiModeSpec {
  Family3 family = Family3::prolate;
  double lambda = 0.5;
  double sigma = 0.5;
  double R = 100.0;
  double rho = 0.0;        // R^{1-sigma}
  double xi0 = 0.0;        // inverted limit symbol at |lambda|
  bool xi0_capped = false;
};

// Validates the family-dependent lambda window and fills rho and xi0.
QuasiModeSpec make_spec(Family3 family, double lambda, double sigma, double R);

struct Sampled1D {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<std::complex<double>> v;
  Mesh1D mesh;

  double norm2() const;   // sqrt(sum w |v|^2)
};

// g_rho(x) = rho^{-1/2} e^{2 pi i xi0 x} (chi zeta)(x/rho) sampled on a panel
// grid over its support, at least 10 nodes per oscillation period.
Sampled1D build_g_rho(const QuasiModeSpec& spec, int n_points = 0, int budget = 1 << 20);

struct ProlateResidual {
  double residual;      // ||lambda g - H_R g|| / ||g||, prolate surface weight
  double l0_residual;   // ||lambda g - L0 * g||_2 / ||g||_2, kernel-independent route
  double gnorm;
  int N;
};
ProlateResidual residual_prolate(double lambda, double sigma, double R, int n_points = 0);

// Planar density on a tensor-product panel grid over the support square.
struct Sampled2D {
  std::vector<double> x;
  std::vector<double> wx;
  std::vector<std::complex<double>> v;   // v[i*n+j] at (x[i], x[j])

  int n() const { return static_cast<int>(x.size()); }
  std::complex<double> at(int i, int j) const { return v[static_cast<size_t>(i) * x.size() + j]; }
};

Sampled2D build_f_rho(const QuasiModeSpec& spec, int n_1d = 0, int budget = 4096);

struct SheetDensities {
  Sampled2D f;
  int lower_sign;   // +1 symmetric (lambda > 0), -1 antisymmetric (lambda < 0)
};
SheetDensities build_phi_rho(const QuasiModeSpec& spec, int n_1d = 0);

struct OblateResidual {
  double k1_term;    // ||K^1 f||_omega / ||f||_omega
  double k2_term;    // |||lambda| f - K^2 f||_omega / ||f||_omega
  double residual;   // k1_term + k2_term
  double fnorm;
};
OblateResidual residual_oblate(double lambda, double sigma, double R, double a = 1.0,
                               int src_n = 0, long long budget = 1LL << 31);

struct FlatResidual {
  double sheet;       // H^{1/2} residual ratio of the sheet part
  double sidewall;    // sup over sampled side-wall points of |K[phi]|
  double fnorm_h12;   // ||f_rho||_{H^{1/2}}, ~ 1 across rho
  int fft_n;
};
FlatResidual residual_flat(double lambda, double sigma, double R, int fft_n = 0);

// Planar H^{1/2} norm in the Fourier-multiplier form ||(1+|xi|^2)^{1/4} fhat||_2.
double h_half_norm(const Grid2D& f);

} // namespace npspec::quasimode

#endif
