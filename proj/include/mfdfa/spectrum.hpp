#ifndef MFDFA_SPECTRUM_HPP
#define MFDFA_SPECTRUM_HPP

#include <vector>

#include "mfdfa/types.hpp"

// Legendre-transform view of the Hurst curve: scaling exponents
// tau(q) = q*h(q) - 1 and the singularity spectrum
//   alpha = h + q*h',   f(alpha) = q*(alpha - h) + 1.

namespace mfdfa {

std::vector<double> scaling_exponents(const HurstCurve& hurst);

// h'(q) by three-point finite differences (central inside, one-sided
// second-order at the ends). Throws GridTooCoarse below 3 grid points.
// Absent h values (NaN) propagate into the touching stencils.
SingularitySpectrum singularity_spectrum(const HurstCurve& hurst);

// Extremes of alpha, the alpha at the peak of f, and the f values at
// those grid points. Peak ties (within 1e-12) resolve to the q nearest 0.
SpectrumDescriptors spectrum_descriptors(const SingularitySpectrum& spec);

} // namespace mfdfa

#endif // MFDFA_SPECTRUM_HPP
