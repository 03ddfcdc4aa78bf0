#ifndef NPSPEC_UTIL_HPP
#define NPSPEC_UTIL_HPP

#include <functional>
#include <thread>
#include <vector>

namespace npspec {

// Deterministic row-parallel loop: contiguous block partition, no reductions.
inline void parallel_for(int n, const std::function<void(int)>& body) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int nthreads = static_cast<int>(std::min<unsigned>(hw ? hw : 1, n > 0 ? n : 1));
  if (nthreads <= 1 || n < 4) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::exception_ptr eptr = nullptr;
  std::mutex emtx;
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (int i = t; i < n; i += nthreads) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(emtx);
        if (!eptr) eptr = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (eptr) std::rethrow_exception(eptr);
}

} // namespace npspec

#endif
