#include "npspec/fft.hpp"

#include <mutex>

#include <fftw3.h>

#include "npspec/errors.hpp"

namespace npspec {

void dft2(Grid2D& g, int sign) {
  if (g.n <= 0 || g.v.size() != static_cast<size_t>(g.n) * g.n)
    raise(errc::domain, "dft2: malformed grid");
  static std::mutex plan_mtx;   // FFTW planning is not thread-safe
  fftw_plan plan;
  auto* data = reinterpret_cast<fftw_complex*>(g.v.data());
  {
    std::lock_guard<std::mutex> lock(plan_mtx);
    plan = fftw_plan_dft_2d(g.n, g.n, data, data,
                            sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mtx);
    fftw_destroy_plan(plan);
  }
}

} // namespace npspec
