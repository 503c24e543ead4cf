#include "mfdfa/synth.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "mfdfa/errors.hpp"

namespace mfdfa::synth {

namespace {

// Gaussian draws built directly on mt19937_64 output so that a seed pins
// the series bit-for-bit (std::normal_distribution is not portable across
// standard library implementations).
class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1], u2 in [0,1)
        const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
        const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    std::uint64_t raw() { return rng_(); }

private:
    std::mt19937_64 rng_;
    double spare_ = 0;
    bool have_spare_ = false;
};

bool is_power_of_two(unsigned n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2 FFT (forward: exp(-2*pi*i*jk/n)).
void fft(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace

TimeSeries white_noise(int n, std::uint64_t seed) {
    if (n < 64)
        throw ConfigError("white noise needs n >= 64");
    GaussianSource gauss(seed);
    TimeSeries ts;
    ts.samples.resize(static_cast<std::size_t>(n));
    for (auto& v : ts.samples)
        v = gauss();
    ts.id = "white-n" + std::to_string(n) + "-s" + std::to_string(seed);
    return ts;
}

TimeSeries fractional_gaussian_noise(int n, double hurst, std::uint64_t seed) {
    if (!(hurst > 0.0) || !(hurst < 1.0))
        throw ConfigError("hurst must lie in (0, 1)");
    if (n < 64 || !is_power_of_two(static_cast<unsigned>(n)))
        throw ConfigError("fgn length must be a power of two, n >= 64");

    const std::size_t N = static_cast<std::size_t>(n);
    const std::size_t m = 2 * N;
    const double two_h = 2.0 * hurst;

    // exact fGn autocovariance, embedded in a circulant of size 2n
    std::vector<std::complex<double>> c(m);
    auto gamma = [two_h](double k) {
        return 0.5 * (std::pow(std::abs(k + 1), two_h) - 2.0 * std::pow(std::abs(k), two_h) +
                      std::pow(std::abs(k - 1), two_h));
    };
    for (std::size_t k = 0; k <= N; ++k)
        c[k] = gamma(static_cast<double>(k));
    for (std::size_t k = 1; k < N; ++k)
        c[m - k] = c[k];

    fft(c); // eigenvalues of the circulant, real by symmetry
    std::vector<double> lambda(m);
    double lam_max = 0;
    for (std::size_t k = 0; k < m; ++k) {
        lambda[k] = c[k].real();
        lam_max = std::max(lam_max, lambda[k]);
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (lambda[k] < -1e-8 * lam_max)
            throw EmbeddingFailure("circulant spectrum has a negative eigenvalue at H=" +
                                   std::to_string(hurst));
        lambda[k] = std::max(lambda[k], 0.0);
    }

    GaussianSource gauss(seed);
    std::vector<std::complex<double>> w(m);
    const double md = static_cast<double>(m);
    w[0] = std::sqrt(lambda[0] / md) * gauss();
    w[N] = std::sqrt(lambda[N] / md) * gauss();
    for (std::size_t k = 1; k < N; ++k) {
        const double re = gauss();
        const double im = gauss();
        const double amp = std::sqrt(lambda[k] / (2.0 * md));
        w[k] = std::complex<double>(amp * re, amp * im);
        w[m - k] = std::conj(w[k]);
    }

    fft(w); // hermitian input -> real output
    TimeSeries ts;
    ts.samples.resize(N);
    for (std::size_t i = 0; i < N; ++i)
        ts.samples[i] = w[i].real();
    ts.id = "fgn-H" + std::to_string(hurst) + "-n" + std::to_string(n) + "-s" +
            std::to_string(seed);
    return ts;
}

TimeSeries binomial_cascade(const CascadeSpec& spec) {
    if (!(spec.multiplier_a > 0.5) || !(spec.multiplier_a < 1.0))
        throw ConfigError("cascade multiplier must lie in (0.5, 1)");
    if (spec.levels < 1 || spec.levels > 26)
        throw ConfigError("cascade levels must lie in [1, 26]");

    GaussianSource rng(spec.seed); // used only for the placement bits
    const double a = spec.multiplier_a;
    std::vector<double> mass{1.0};
    for (int level = 0; level < spec.levels; ++level) {
        std::vector<double> next(mass.size() * 2);
        for (std::size_t i = 0; i < mass.size(); ++i) {
            const bool swap = spec.shuffle && (rng.raw() & 1u);
            const double lhs = mass[i] * (swap ? 1.0 - a : a);
            const double rhs = mass[i] * (swap ? a : 1.0 - a);
            next[2 * i] = lhs;
            next[2 * i + 1] = rhs;
        }
        mass = std::move(next);
    }

    TimeSeries ts;
    ts.samples = std::move(mass);
    ts.id = "cascade-k" + std::to_string(spec.levels) + "-a" + std::to_string(a) +
            "-s" + std::to_string(spec.seed) + (spec.shuffle ? "" : "-ordered");
    return ts;
}

double analytic_binomial_hurst(double q, double a) {
    if (!(a > 0.5) || !(a < 1.0))
        throw ConfigError("cascade multiplier must lie in (0.5, 1)");
    if (std::abs(q) < 1e-12) {
        const double eps = 1e-6;
        return 0.5 * (analytic_binomial_hurst(eps, a) + analytic_binomial_hurst(-eps, a));
    }
    return 1.0 / q - std::log2(std::pow(a, q) + std::pow(1.0 - a, q)) / q;
}

} // namespace mfdfa::synth
