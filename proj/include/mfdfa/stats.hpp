#ifndef MFDFA_STATS_HPP
#define MFDFA_STATS_HPP

#include <array>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

// Feature ranking by Welch's two-sample t-test and greedy forward
// selection of the feature subset that maximizes cross-validated accuracy.

namespace mfdfa::stats {

struct TTestResult {
    double t = 0;
    double p = 1;        // two-sided
    double log10_p = 0;  // exact even when p underflows
    double df = 0;       // Welch-Satterthwaite degrees of freedom
    bool degenerate = false; // both samples constant
};

// Unequal-variance (Welch) t-test. Two constant equal samples give
// t = 0, p = 1 with the degenerate flag; constant samples with different
// means give an infinite t (perfect separation), p = 0.
TTestResult two_sample_t_test(std::span<const double> a, std::span<const double> b);

// Regularized incomplete beta I_x(a, b) and its natural log, evaluated by
// continued fraction to 1e-12. Exposed for tests.
double incomplete_beta(double a, double b, double x);
double log_incomplete_beta(double a, double b, double x);

struct RankedFeature {
    int feature_index = 0; // 1-based column number
    double t_statistic = 0;
    double p_value = 1;
    double log10_p = 0;
    std::array<double, 2> class_means{};
    std::array<double, 2> class_stds{};
};

// One entry per column of X, sorted by |t| descending (ties by lower
// index). class order: positive label (+1) first.
std::vector<RankedFeature> rank_features(const Eigen::MatrixXd& X,
                                         const std::vector<int>& labels);

struct SelectionResult {
    std::vector<int> selected_indices;  // in acceptance order
    std::vector<double> accuracy_trace; // CV accuracy after each accepted add
};

using SubsetEvaluator = std::function<double(const std::vector<int>&)>;

// Greedy growth in rank order: keep adding the next-ranked feature while
// the evaluated accuracy strictly improves, stop at the first addition
// that does not.
SelectionResult sequential_forward_select(const std::vector<RankedFeature>& ranked,
                                          const SubsetEvaluator& evaluate);

} // namespace mfdfa::stats

#endif // MFDFA_STATS_HPP
