#ifndef MFDFA_TYPES_HPP
#define MFDFA_TYPES_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace mfdfa {

// A single-channel signal. Samples are dimensionless after load; the
// sampling rate is carried as metadata only (the analysis itself works in
// sample units).
struct TimeSeries {
    std::vector<double> samples;
    double sample_rate = 1.0; // Hz
    std::string label;        // optional class tag
    std::string id;           // source identifier (filename, generator tag)

    std::size_t size() const noexcept { return samples.size(); }
};

// Analysis parameters. Defaults reproduce the standard configuration:
// q from -5 to +5 in steps of 0.1, scales 16..1024 on 19 logarithmic
// intervals, first-order detrending.
struct MfdfaConfig {
    std::vector<double> q_values;
    int scale_min = 16;
    int scale_max = 1024;
    int scale_intervals = 19; // grid has scale_intervals + 1 points before dedup
    int detrend_order = 1;
    int min_segment_points = 4;

    static MfdfaConfig defaults();

    // Throws ConfigError when the q-grid or scale bounds are malformed.
    void validate() const;
    // Additionally checks the bounds that depend on the series length
    // (scale_max <= n/4, n >= 2*scale_min).
    void validate_for_length(std::size_t n) const;
};

// Builds the q-grid q_min..q_max with the given uniform step, endpoint
// exact (no floating-point drift across the grid, so q = 2 and q = 0 land
// exactly when they are multiples of the step).
std::vector<double> make_q_grid(double q_min, double q_max, double q_step);

struct FluctuationSurface {
    std::vector<int> scales;
    std::vector<double> q_values;
    // values[qi][si] = F_q(s); NaN marks cells the scaling fit must skip
    std::vector<std::vector<double>> values;
};

struct HurstCurve {
    std::vector<double> q_values;
    std::vector<double> h;      // regression slope per q; NaN when absent
    std::vector<double> fit_r2; // goodness of fit per q
};

struct SingularitySpectrum {
    std::vector<double> q_values;
    std::vector<double> tau;
    std::vector<double> alpha;
    std::vector<double> f_alpha;
};

struct SpectrumDescriptors {
    double alpha_peak = 0;
    double alpha_min = 0;
    double alpha_max = 0;
    double f_at_alpha_min = 0;
    double f_at_alpha_max = 0;
    double f_at_peak = 0;
};

struct MfdfaResult {
    FluctuationSurface surface;
    HurstCurve hurst;
    SingularitySpectrum spectrum;
    SpectrumDescriptors descriptors;
    // segments with exactly zero variance that were excluded from q <= 0
    // averages (summed over all scales)
    std::size_t zero_variance_segments = 0;
};

} // namespace mfdfa

#endif // MFDFA_TYPES_HPP
