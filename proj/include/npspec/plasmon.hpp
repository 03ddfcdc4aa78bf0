#ifndef NPSPEC_PLASMON_HPP
#define NPSPEC_PLASMON_HPP

#include <vector>

#include "npspec/types.hpp"

namespace npspec::plasmon {

// Quasi-static resonance condition (k+1)/(2(k-1)) = lambda.
struct ResonancePair {
  double lambda;
  double k;
};

// k = (2 lambda + 1)/(2 lambda - 1); lambda in [-1/2, 1/2), pole at 1/2.
double dielectric_for_eigenvalue(double lambda);

// lambda = (k+1)/(2(k-1)); pole at k = 1.
double eigenvalue_for_dielectric(double k);

// Pairs for every spectrum entry with a finite dielectric constant, sorted by
// |k| ascending so that the smaller-|k| resonances of negative eigenvalues
// lead the table. Entries within 1e-12 of lambda = 1/2 are skipped (pole).
std::vector<ResonancePair> resonance_table(const SpectrumResult& spectrum);

} // namespace npspec::plasmon

#endif
