#include "mfdfa/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "mfdfa/errors.hpp"
#include "mfdfa/spectrum.hpp"

namespace mfdfa {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Least-squares polynomial detrender for segments of a fixed length.
// The basis is centered within the segment to keep the fit well
// conditioned at large scales; the QR factorization is shared by all
// segments of that scale.
class SegmentDetrender {
public:
    SegmentDetrender(int scale, int order)
        : basis_(scale, order + 1) {
        const double mid = 0.5 * static_cast<double>(scale - 1);
        for (int i = 0; i < scale; ++i) {
            const double x = static_cast<double>(i) - mid;
            double p = 1.0;
            for (int j = 0; j <= order; ++j) {
                basis_(i, j) = p;
                p *= x;
            }
        }
        qr_.compute(basis_);
    }

    // Mean squared residual over the segment.
    double variance(std::span<const double> segment) const {
        Eigen::Map<const Eigen::VectorXd> y(segment.data(),
                                            static_cast<Eigen::Index>(segment.size()));
        const Eigen::VectorXd coeffs = qr_.solve(y);
        const double ss = (y - basis_ * coeffs).squaredNorm();
        return ss / static_cast<double>(segment.size());
    }

private:
    Eigen::MatrixXd basis_;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
};

struct LineFit {
    double slope = kNaN;
    double intercept = kNaN;
    double r2 = kNaN;
};

LineFit ols_line(const std::vector<double>& x, const std::vector<double>& y) {
    const auto n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (syy > 0) {
        double ss_res = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            ss_res += r * r;
        }
        fit.r2 = 1.0 - ss_res / syy;
    } else {
        fit.r2 = 1.0; // constant y is fit exactly by a flat line
    }
    return fit;
}

} // namespace

MfdfaConfig MfdfaConfig::defaults() {
    MfdfaConfig cfg;
    cfg.q_values = make_q_grid(-5.0, 5.0, 0.1);
    return cfg;
}

std::vector<double> make_q_grid(double q_min, double q_max, double q_step) {
    if (!(q_step > 0) || !(q_max > q_min))
        throw ConfigError("q grid requires q_min < q_max and q_step > 0");
    const double span = q_max - q_min;
    const auto steps = static_cast<long>(std::llround(span / q_step));
    if (steps < 1 || std::abs(span - static_cast<double>(steps) * q_step) > 1e-9 * span)
        throw ConfigError("q_step does not divide the q range evenly");
    std::vector<double> grid(static_cast<std::size_t>(steps) + 1);
    for (long i = 0; i <= steps; ++i)
        grid[static_cast<std::size_t>(i)] =
            q_min + (static_cast<double>(i) * span) / static_cast<double>(steps);
    return grid;
}

void MfdfaConfig::validate() const {
    if (q_values.size() < 2)
        throw ConfigError("q grid needs at least two values");
    for (std::size_t i = 1; i < q_values.size(); ++i)
        if (!(q_values[i] > q_values[i - 1]))
            throw ConfigError("q values must be strictly increasing");
    if (!(q_values.front() < 0.0) || !(q_values.back() > 0.0))
        throw ConfigError("q grid must span negative and positive orders");
    const bool has_q2 = std::any_of(q_values.begin(), q_values.end(),
                                    [](double q) { return std::abs(q - 2.0) <= 1e-9; });
    if (!has_q2)
        throw ConfigError("q grid must contain q = 2");
    if (scale_min < 4)
        throw ConfigError("scale_min must be at least 4");
    if (scale_min >= scale_max)
        throw ConfigError("scale_min must be below scale_max");
    if (scale_intervals < 1)
        throw DegenerateGrid("scale grid needs at least one interval");
    if (detrend_order < 1)
        throw ConfigError("detrend_order must be at least 1");
    if (detrend_order + 2 > scale_min)
        throw ConfigError("scale_min must be at least detrend_order + 2");
    if (min_segment_points > scale_min)
        throw ConfigError("scale_min is below min_segment_points");
}

void MfdfaConfig::validate_for_length(std::size_t n) const {
    validate();
    if (n < 2 * static_cast<std::size_t>(scale_min))
        throw DataError("series too short: need at least twice the smallest scale");
    if (static_cast<std::size_t>(scale_max) * 4 > n)
        throw DataError("scale_max exceeds a quarter of the series length");
}

std::vector<double> build_profile(const TimeSeries& series) {
    const auto& y = series.samples;
    if (y.empty())
        throw DataError("empty series");
    double sum = 0;
    for (double v : y) {
        if (!std::isfinite(v))
            throw NonFiniteSample("series contains NaN or Inf: " + series.id);
        sum += v;
    }
    const double mean = sum / static_cast<double>(y.size());
    std::vector<double> profile(y.size());
    double acc = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        acc += y[i] - mean;
        profile[i] = acc;
    }
    return profile;
}

std::vector<int> make_scale_grid(const MfdfaConfig& config) {
    config.validate();
    const double lo = std::log(static_cast<double>(config.scale_min));
    const double hi = std::log(static_cast<double>(config.scale_max));
    std::vector<int> scales;
    scales.reserve(static_cast<std::size_t>(config.scale_intervals) + 1);
    for (int i = 0; i <= config.scale_intervals; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(config.scale_intervals);
        const double s = std::exp(lo + t * (hi - lo));
        scales.push_back(static_cast<int>(std::llround(s)));
    }
    scales.front() = config.scale_min;
    scales.back() = config.scale_max;
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    if (scales.size() < 4)
        throw DegenerateGrid("scale grid collapsed to fewer than 4 distinct scales");
    return scales;
}

std::vector<double> segment_variances(std::span<const double> profile,
                                      int scale, int detrend_order) {
    const std::size_t n = profile.size();
    const auto s = static_cast<std::size_t>(scale);
    if (scale < 2 || s * 2 > n)
        throw ScaleTooLarge("scale must satisfy 2*scale <= series length");
    if (scale < detrend_order + 2)
        throw FitUnderdetermined("segment of length " + std::to_string(scale) +
                                 " cannot support a detrend of order " +
                                 std::to_string(detrend_order));

    const std::size_t n_seg = n / s;
    const SegmentDetrender detrender(scale, detrend_order);
    std::vector<double> variances;
    variances.reserve(2 * n_seg);
    // forward pass: segment v covers [v*s, (v+1)*s)
    for (std::size_t v = 0; v < n_seg; ++v)
        variances.push_back(detrender.variance(profile.subspan(v * s, s)));
    // reverse pass: segment v covers [n - (v+1)*s, n - v*s)
    for (std::size_t v = 0; v < n_seg; ++v)
        variances.push_back(detrender.variance(profile.subspan(n - (v + 1) * s, s)));
    return variances;
}

double fluctuation_function(std::span<const double> variances, double q) {
    if (variances.empty())
        throw DataError("no segment variances to average");
    const bool q_is_zero = std::abs(q) < 1e-12;

    if (q > 0 && !q_is_zero) {
        double acc = 0;
        for (double v : variances)
            acc += std::pow(v, 0.5 * q);
        return std::pow(acc / static_cast<double>(variances.size()), 1.0 / q);
    }

    // q <= 0: zero variances would make the mean blow up / the log
    // undefined, so they are dropped from the average.
    double acc = 0;
    std::size_t kept = 0;
    for (double v : variances) {
        if (v <= 0.0)
            continue;
        acc += q_is_zero ? std::log(v) : std::pow(v, 0.5 * q);
        ++kept;
    }
    if (kept == 0)
        throw AllZeroVariance("every segment variance is zero at q <= 0 "
                              "(deterministic segment set)");
    if (q_is_zero)
        return std::exp(0.5 * acc / static_cast<double>(kept));
    return std::pow(acc / static_cast<double>(kept), 1.0 / q);
}

HurstCurve fit_hurst(const FluctuationSurface& surface) {
    HurstCurve curve;
    curve.q_values = surface.q_values;
    curve.h.assign(surface.q_values.size(), kNaN);
    curve.fit_r2.assign(surface.q_values.size(), kNaN);

    std::vector<double> log_s;
    std::vector<double> log_f;
    for (std::size_t qi = 0; qi < surface.q_values.size(); ++qi) {
        log_s.clear();
        log_f.clear();
        for (std::size_t si = 0; si < surface.scales.size(); ++si) {
            const double f = surface.values[qi][si];
            if (!std::isfinite(f) || f <= 0.0)
                continue;
            log_s.push_back(std::log(static_cast<double>(surface.scales[si])));
            log_f.push_back(std::log(f));
        }
        if (log_s.size() < 4)
            continue; // h stays absent for this q
        const LineFit fit = ols_line(log_s, log_f);
        curve.h[qi] = fit.slope;
        curve.fit_r2[qi] = fit.r2;
    }
    return curve;
}

MfdfaResult analyze(const TimeSeries& series, const MfdfaConfig& config) {
    config.validate_for_length(series.size());

    const std::vector<double> profile = build_profile(series);
    const std::vector<int> scales = make_scale_grid(config);

    MfdfaResult result;
    result.surface.scales = scales;
    result.surface.q_values = config.q_values;
    result.surface.values.assign(config.q_values.size(),
                                 std::vector<double>(scales.size(), kNaN));

    for (std::size_t si = 0; si < scales.size(); ++si) {
        const std::vector<double> variances =
            segment_variances(profile, scales[si], config.detrend_order);
        for (double v : variances)
            if (v <= 0.0)
                ++result.zero_variance_segments;
        for (std::size_t qi = 0; qi < config.q_values.size(); ++qi)
            result.surface.values[qi][si] =
                fluctuation_function(variances, config.q_values[qi]);
    }

    result.hurst = fit_hurst(result.surface);
    result.spectrum = singularity_spectrum(result.hurst);
    result.descriptors = spectrum_descriptors(result.spectrum);
    return result;
}

} // namespace mfdfa
