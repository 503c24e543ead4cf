#ifndef MFDFA_SYNTH_HPP
#define MFDFA_SYNTH_HPP

#include <cstdint>

#include "mfdfa/types.hpp"

// Synthetic series with analytically known scaling, used as ground truth
// for the analysis chain: white noise (h(2) = 0.5), fractional Gaussian
// noise (h(q) = H for all q), and the deterministic binomial cascade whose
// generalized Hurst exponent has a closed form.

namespace mfdfa::synth {

struct CascadeSpec {
    int levels = 16;          // series length 2^levels
    double multiplier_a = 0.6; // in (0.5, 1); levels >= 10 recommended for
                               // stable exponent estimates
    std::uint64_t seed = 1;
    bool shuffle = true; // randomize left/right placement per split
};

// i.i.d. standard Gaussians from a seeded generator (n >= 64).
TimeSeries white_noise(int n, std::uint64_t seed);

// Fractional Gaussian noise by circulant embedding of the exact
// autocovariance; requires 0 < hurst < 1 and n a power of two. Throws
// EmbeddingFailure if the circulant spectrum turns out negative (does not
// happen in the supported parameter range).
TimeSeries fractional_gaussian_noise(int n, double hurst, std::uint64_t seed);

// Binomial measure: k splits of mass 1 into (a, 1-a) parts. The series
// sums to 1 exactly up to rounding.
TimeSeries binomial_cascade(const CascadeSpec& spec);

// Closed form h(q) = 1/q - log2(a^q + (1-a)^q)/q for the cascade; the
// q = 0 value is the symmetric finite-difference limit at q = +/-1e-6.
double analytic_binomial_hurst(double q, double a);

} // namespace mfdfa::synth

#endif // MFDFA_SYNTH_HPP
