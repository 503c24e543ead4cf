#ifndef MFDFA_FEATURES_HPP
#define MFDFA_FEATURES_HPP

#include <array>
#include <string>

#include "mfdfa/types.hpp"

// The 14 scalar descriptors of a multifractal spectrum used as classifier
// inputs, in fixed order:
//   f1  h(2)                      f8  alpha_peak - alpha_max
//   f2  alpha_peak                f9  f(alpha_max)
//   f3  alpha_max                 f10 f(alpha_min)
//   f4  alpha_min                 f11 (f9 + f10) / 2
//   f5  (f3 + f4) / 2             f12 f9 - f10
//   f6  f3 - f4  (spectrum width) f13 f(alpha_peak) - f10
//   f7  alpha_peak - alpha_min    f14 f(alpha_peak) - f9

namespace mfdfa {

// "literal" follows the definitions above; "table_consistent" swaps the
// roles of f7 and f8 (so f7 <= 0 <= f8), matching the sign convention some
// published result tables use for the horizontal peak distances.
enum class FeatureConvention { literal, table_consistent };

struct FeatureVector {
    std::array<double, 14> values{};
    std::string signal_id;

    // 1-based accessor matching the feature numbering
    double f(int index) const { return values.at(static_cast<std::size_t>(index - 1)); }
};

inline constexpr int kFeatureCount = 14;

FeatureVector extract_features(const MfdfaResult& result,
                               FeatureConvention convention = FeatureConvention::literal);

} // namespace mfdfa

#endif // MFDFA_FEATURES_HPP
