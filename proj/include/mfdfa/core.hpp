#ifndef MFDFA_CORE_HPP
#define MFDFA_CORE_HPP

#include <span>
#include <vector>

#include "mfdfa/types.hpp"

// Multifractal detrended fluctuation analysis.
//
// The pipeline: cumulative profile of the mean-subtracted signal ->
// non-overlapping segmentation at each scale, run from both ends of the
// series -> least-squares polynomial detrending per segment -> q-order
// generalized means of the segment variances -> log-log regression of
// F_q(s) against s, whose slope is the generalized Hurst exponent h(q).

namespace mfdfa {

// Profile Y(i) = sum_{n<=i} (y(n) - mean). The last element is ~0 by
// construction. Throws NonFiniteSample on NaN/Inf input.
std::vector<double> build_profile(const TimeSeries& series);

// Integer scales, log-spaced between scale_min and scale_max inclusive,
// rounded and deduplicated. Throws DegenerateGrid if fewer than 4 distinct
// scales remain.
std::vector<int> make_scale_grid(const MfdfaConfig& config);

// Mean squared residual of a polynomial fit in each segment. The first
// N_s entries segment the profile from the start, the next N_s from the
// end, N_s = floor(N / scale). Always returns 2*N_s values, also when N is
// an exact multiple of the scale.
std::vector<double> segment_variances(std::span<const double> profile,
                                      int scale, int detrend_order);

// Generalized mean of order q/2 over the segment variances:
//   q != 0:  { mean(v^(q/2)) }^(1/q)
//   q  = 0:  exp{ mean(ln v) / 2 }   (logarithmic averaging)
// Zero variances are excluded from q <= 0 averages; AllZeroVariance when
// nothing remains to average.
double fluctuation_function(std::span<const double> variances, double q);

// Per q, ordinary least-squares fit of ln F against ln s. Scales with
// non-finite or non-positive F are skipped; a q with fewer than 4 usable
// scales gets h = NaN rather than a fabricated value.
HurstCurve fit_hurst(const FluctuationSurface& surface);

// Full analysis: profile, scale grid, variances, fluctuation surface,
// Hurst curve, scaling exponents and singularity spectrum.
MfdfaResult analyze(const TimeSeries& series, const MfdfaConfig& config);

} // namespace mfdfa

#endif // MFDFA_CORE_HPP
