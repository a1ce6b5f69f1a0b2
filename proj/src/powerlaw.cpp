#include "qsd/powerlaw.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qsd {

double harmonic_number(int R, double k) {
    if (R < 1) throw std::domain_error("harmonic_number: R must be >= 1");
    KahanSum acc;
    for (int i = 1; i <= R; ++i) acc.add(std::pow(static_cast<double>(i), -k));
    return acc.value();
}

double continuous_h(int R, double k) {
    if (R < 1) throw std::domain_error("continuous_h: R must be >= 1");
    const double u = 1.0 - k;
    const double L = std::log(static_cast<double>(R));
    if (std::abs(u) < 1e-9) {
        // (e^{uL} - 1)/u expanded around u = 0
        return L * (1.0 + u * L / 2.0 * (1.0 + u * L / 3.0));
    }
    return (std::pow(static_cast<double>(R), u) - 1.0) / u;
}

double pmf(const PowerLawSpec& spec, int rank) {
    if (rank < 1 || rank > spec.R) throw std::domain_error("pmf: rank out of range");
    return std::pow(static_cast<double>(rank), -spec.k) / harmonic_number(spec.R, spec.k);
}

PowerLawSampler::PowerLawSampler(const PowerLawSpec& spec) : cdf_(spec.R) {
    KahanSum acc;
    for (int r = 1; r <= spec.R; ++r) {
        acc.add(std::pow(static_cast<double>(r), -spec.k));
        cdf_[r - 1] = acc.value();
    }
    const double total = cdf_.back();
    for (double& v : cdf_) v /= total;
    cdf_.back() = 1.0;
}

int PowerLawSampler::operator()(std::mt19937_64& rng) const {
    const double u = next_canonical(rng);
    auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
    return static_cast<int>(it - cdf_.begin()) + 1;
}

std::vector<int> sample(const PowerLawSpec& spec, std::uint64_t seed, std::size_t count) {
    PowerLawSampler sampler(spec);
    std::mt19937_64 rng(seed);
    std::vector<int> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = sampler(rng);
    return out;
}

namespace {

// Least-squares slope/intercept of y against x.
struct LineFit {
    double slope;
    double intercept;
};

LineFit ols(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

}  // namespace

double subset_exponent_estimate(const PowerLawSpec& spec, int subset_size,
                                std::uint64_t seed, int trials) {
    if (subset_size < 1 || subset_size > spec.R)
        throw std::domain_error("subset_exponent_estimate: subset_size out of range");
    if (trials < 1) throw std::domain_error("subset_exponent_estimate: trials must be >= 1");

    std::vector<double> masses(spec.R);
    for (int r = 1; r <= spec.R; ++r)
        masses[r - 1] = std::pow(static_cast<double>(r), -spec.k);

    std::mt19937_64 rng(seed);
    std::vector<int> idx(spec.R);
    std::vector<double> sub(subset_size);
    std::vector<double> profile(subset_size, 0.0);

    for (int t = 0; t < trials; ++t) {
        std::iota(idx.begin(), idx.end(), 0);
        // partial Fisher-Yates: uniform subset without replacement
        for (int j = 0; j < subset_size; ++j) {
            const int pick = j + static_cast<int>(next_canonical(rng) * (spec.R - j));
            std::swap(idx[j], idx[pick]);
            sub[j] = masses[idx[j]];
        }
        std::sort(sub.begin(), sub.end(), std::greater<>());
        const double total = std::accumulate(sub.begin(), sub.end(), 0.0);
        for (int j = 0; j < subset_size; ++j) profile[j] += sub[j] / total;
    }
    for (double& v : profile) v /= trials;

    std::vector<double> lx(subset_size), ly(subset_size);
    for (int j = 0; j < subset_size; ++j) {
        lx[j] = std::log(static_cast<double>(j + 1));
        ly[j] = std::log(profile[j]);
    }
    if (subset_size == 1) return spec.k;  // single rank carries no slope
    return -ols(lx, ly).slope;
}

double ProductPowerLaw::log_pmf(const std::vector<int>& ranks) const {
    if (static_cast<int>(ranks.size()) != n)
        throw std::domain_error("ProductPowerLaw: rank vector length != n");
    const double logH = std::log(harmonic_number(base.R, base.k));
    double acc = 0.0;
    for (int r : ranks) {
        if (r < 1 || r > base.R) throw std::domain_error("ProductPowerLaw: rank out of range");
        acc -= base.k * std::log(static_cast<double>(r));
    }
    return acc - n * logH;
}

}  // namespace qsd
