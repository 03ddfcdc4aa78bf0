#include "npspec/plasmon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "npspec/errors.hpp"

namespace npspec::plasmon {

double dielectric_for_eigenvalue(double lambda) {
  if (std::abs(lambda - 0.5) < 1e-15)
    raise(errc::pole, "dielectric_for_eigenvalue: lambda = 1/2 has no finite dielectric constant");
  if (!(lambda >= -0.5 && lambda < 0.5))
    raise(errc::domain, "dielectric_for_eigenvalue: lambda must lie in [-1/2, 1/2)");
  return (2.0 * lambda + 1.0) / (2.0 * lambda - 1.0);
}

double eigenvalue_for_dielectric(double k) {
  if (k == 1.0) raise(errc::pole, "eigenvalue_for_dielectric: k = 1 is a pole of the map");
  return (k + 1.0) / (2.0 * (k - 1.0));
}

std::vector<ResonancePair> resonance_table(const SpectrumResult& spectrum) {
  std::vector<ResonancePair> table;
  table.reserve(spectrum.entries.size());
  for (const auto& e : spectrum.entries) {
    if (std::abs(e.re - 0.5) < 1e-12) continue;
    if (e.re < -0.5 || e.re > 0.5) continue;
    table.push_back({e.re, dielectric_for_eigenvalue(e.re)});
  }
  std::stable_sort(table.begin(), table.end(), [](const ResonancePair& a, const ResonancePair& b) {
    return std::abs(a.k) < std::abs(b.k);
  });
  return table;
}

} // namespace npspec::plasmon
