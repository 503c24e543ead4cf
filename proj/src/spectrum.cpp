#include "mfdfa/spectrum.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "mfdfa/errors.hpp"

namespace mfdfa {

namespace {

// Derivative of the quadratic through (x0,y0),(x1,y1),(x2,y2) evaluated at
// t. Exact for uniform and non-uniform grids; second-order accurate.
double three_point_derivative(double t, double x0, double y0, double x1,
                              double y1, double x2, double y2) {
    return y0 * (2 * t - x1 - x2) / ((x0 - x1) * (x0 - x2)) +
           y1 * (2 * t - x0 - x2) / ((x1 - x0) * (x1 - x2)) +
           y2 * (2 * t - x0 - x1) / ((x2 - x0) * (x2 - x1));
}

} // namespace

std::vector<double> scaling_exponents(const HurstCurve& hurst) {
    std::vector<double> tau(hurst.q_values.size());
    for (std::size_t i = 0; i < tau.size(); ++i)
        tau[i] = hurst.q_values[i] * hurst.h[i] - 1.0;
    return tau;
}

SingularitySpectrum singularity_spectrum(const HurstCurve& hurst) {
    const std::size_t n = hurst.q_values.size();
    if (n < 3)
        throw GridTooCoarse("singularity spectrum needs at least 3 q points");

    SingularitySpectrum spec;
    spec.q_values = hurst.q_values;
    spec.tau = scaling_exponents(hurst);
    spec.alpha.resize(n);
    spec.f_alpha.resize(n);

    const auto& q = hurst.q_values;
    const auto& h = hurst.h;
    for (std::size_t i = 0; i < n; ++i) {
        // stencil {i-1,i,i+1}, shifted inward at the two endpoints
        std::size_t a = (i == 0) ? 0 : (i == n - 1 ? n - 3 : i - 1);
        const double dh = three_point_derivative(q[i], q[a], h[a], q[a + 1],
                                                 h[a + 1], q[a + 2], h[a + 2]);
        spec.alpha[i] = h[i] + q[i] * dh;
        spec.f_alpha[i] = q[i] * (spec.alpha[i] - h[i]) + 1.0;
    }
    return spec;
}

SpectrumDescriptors spectrum_descriptors(const SingularitySpectrum& spec) {
    SpectrumDescriptors d;
    bool found = false;
    std::size_t imin = 0, imax = 0;
    for (std::size_t i = 0; i < spec.alpha.size(); ++i) {
        if (!std::isfinite(spec.alpha[i]) || !std::isfinite(spec.f_alpha[i]))
            continue;
        if (!found) {
            imin = imax = i;
            found = true;
            continue;
        }
        if (spec.alpha[i] < spec.alpha[imin])
            imin = i;
        if (spec.alpha[i] > spec.alpha[imax])
            imax = i;
    }
    if (!found)
        throw DegenerateSpectrum("no finite grid point in the singularity spectrum");

    double f_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spec.f_alpha.size(); ++i)
        if (std::isfinite(spec.f_alpha[i]) && std::isfinite(spec.alpha[i]) &&
            spec.f_alpha[i] > f_max)
            f_max = spec.f_alpha[i];

    // among near-ties for the peak, prefer the grid point closest to q = 0
    std::size_t ipeak = 0;
    double best_absq = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < spec.f_alpha.size(); ++i) {
        if (!std::isfinite(spec.f_alpha[i]) || !std::isfinite(spec.alpha[i]))
            continue;
        if (spec.f_alpha[i] < f_max - 1e-12)
            continue;
        const double absq = std::abs(spec.q_values[i]);
        if (absq < best_absq) {
            best_absq = absq;
            ipeak = i;
        }
    }

    d.alpha_min = spec.alpha[imin];
    d.alpha_max = spec.alpha[imax];
    d.alpha_peak = spec.alpha[ipeak];
    d.f_at_alpha_min = spec.f_alpha[imin];
    d.f_at_alpha_max = spec.f_alpha[imax];
    d.f_at_peak = spec.f_alpha[ipeak];
    return d;
}

} // namespace mfdfa
