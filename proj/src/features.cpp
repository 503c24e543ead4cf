#include "mfdfa/features.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "mfdfa/errors.hpp"

namespace mfdfa {

FeatureVector extract_features(const MfdfaResult& result, FeatureConvention convention) {
    const auto& hurst = result.hurst;
    double h2 = std::numeric_limits<double>::quiet_NaN();
    for (std::size_t i = 0; i < hurst.q_values.size(); ++i) {
        if (std::abs(hurst.q_values[i] - 2.0) <= 1e-9) {
            h2 = hurst.h[i];
            break;
        }
    }
    if (std::isnan(h2))
        throw MissingQ2("h(2) is unavailable: q = 2 missing from the grid or its fit failed");

    const SpectrumDescriptors& d = result.descriptors;

    FeatureVector fv;
    auto& f = fv.values;
    f[0] = h2;
    f[1] = d.alpha_peak;
    f[2] = d.alpha_max;
    f[3] = d.alpha_min;
    f[4] = 0.5 * (f[2] + f[3]);
    f[5] = f[2] - f[3];
    f[6] = d.alpha_peak - d.alpha_min;
    f[7] = d.alpha_peak - d.alpha_max;
    if (convention == FeatureConvention::table_consistent)
        std::swap(f[6], f[7]);
    f[8] = d.f_at_alpha_max;
    f[9] = d.f_at_alpha_min;
    f[10] = 0.5 * (f[8] + f[9]);
    f[11] = f[8] - f[9];
    f[12] = d.f_at_peak - d.f_at_alpha_min;
    f[13] = d.f_at_peak - d.f_at_alpha_max;

    for (double v : f)
        if (!std::isfinite(v))
            throw DegenerateSpectrum("feature extraction produced a non-finite value");
    return fv;
}

} // namespace mfdfa
