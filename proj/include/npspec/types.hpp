#ifndef NPSPEC_TYPES_HPP
#define NPSPEC_TYPES_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "npspec/errors.hpp"

namespace npspec {

using Vec2 = std::array<double, 2>;

// Spheroidal mode index: degree n >= 1, order |m| <= n.
struct ModeIndex {
  int n;
  int m;

  void validate() const {
    if (n < 1) raise(errc::domain, "ModeIndex: degree n must be >= 1");
    if (m < -n || m > n) raise(errc::domain, "ModeIndex: order must satisfy |m| <= n");
  }
};

enum class Parity { even, odd };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

struct SpectrumEntry {
  double re = 0.0;
  double im = 0.0;   // imaginary residual, kept as a discretization-quality signal
  std::string label;
};

// Eigenvalue list plus provenance. Entries are sorted by real part, descending.
struct SpectrumResult {
  std::vector<SpectrumEntry> entries;

  std::string family;   // "prolate" | "oblate" | "prolate-analytic"
  std::string scheme;
  double R = 0.0;
  double a = 0.0;
  double L = 0.0;
  int N = 0;
  int m = 0;
  std::string parity;

  double imag_max = 0.0;
  double asymmetry = 0.0;   // pre-symmetrization defect of the similarity-transformed matrix
  double wall_ms = 0.0;

  // Spectral confinement and numerical realness. Violations abort the run.
  void validate() const {
    for (const auto& e : entries) {
      if (!(e.re > -0.51 && e.re < 0.51))
        raise(errc::invariant, "SpectrumResult: eigenvalue " + std::to_string(e.re) +
                                   " outside (-0.51, 0.51)");
      if (!(std::abs(e.im) < 1e-6 * (1.0 + std::abs(e.re))))
        raise(errc::invariant, "SpectrumResult: imaginary residual " + std::to_string(e.im) +
                                   " exceeds 1e-6*(1+|re|) at re=" + std::to_string(e.re));
    }
  }
};

// Square uniform complex grid centered at the origin: node (i,j) sits at
// (x0 + i*dx, x0 + j*dx) with x0 = -(n-1)/2*dx; row-major v[i*n+j].
struct Grid2D {
  int n = 0;
  double dx = 0.0;
  std::vector<std::complex<double>> v;

  double coord(int i) const { return (i - 0.5 * (n - 1)) * dx; }
  std::complex<double>& at(int i, int j) { return v[static_cast<size_t>(i) * n + j]; }
  const std::complex<double>& at(int i, int j) const { return v[static_cast<size_t>(i) * n + j]; }
};

} // namespace npspec

#endif
