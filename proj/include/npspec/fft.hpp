#ifndef NPSPEC_FFT_HPP
#define NPSPEC_FFT_HPP

#include "npspec/types.hpp"

namespace npspec {

// Unnormalized in-place 2-D DFT (sign = -1 forward, +1 inverse), FFTW-backed.
// Plans are created with FFTW_ESTIMATE so results are deterministic.
void dft2(Grid2D& g, int sign);

// Signed continuum frequency of DFT index k on an n-point grid of spacing dx.
inline double dft_freq(int k, int n, double dx) {
  return (k <= n / 2 ? k : k - n) / (n * dx);
}

} // namespace npspec

#endif
