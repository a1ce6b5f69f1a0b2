#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qsd/common.hpp"

namespace qsd {

/// Discrete power law over ranks 1..R with exponent k:
/// pmf(r) = r^-k / H_R(k).
struct PowerLawSpec {
    int R;
    double k;

    PowerLawSpec(int R_, double k_) : R(R_), k(k_) {
        if (R < 1) throw std::domain_error("PowerLawSpec: R must be >= 1");
        if (k < 0) throw std::domain_error("PowerLawSpec: k must be >= 0");
    }
};

/// Generalized harmonic number H_R(k) = sum_{i=1..R} i^-k, compensated
/// summation ascending in i.
double harmonic_number(int R, double k);

/// Continuous counterpart h_R(k) = int_1^R r^-k dr, with a series branch
/// around the k = 1 singularity.
double continuous_h(int R, double k);

double pmf(const PowerLawSpec& spec, int rank);

/// Inverse-CDF sampler, O(log R) per draw after O(R) setup.
class PowerLawSampler {
  public:
    explicit PowerLawSampler(const PowerLawSpec& spec);
    int operator()(std::mt19937_64& rng) const;

  private:
    std::vector<double> cdf_;
};

std::vector<int> sample(const PowerLawSpec& spec, std::uint64_t seed, std::size_t count);

/// Draws `trials` uniformly random subsets of `subset_size` ranks,
/// renormalizes each subset's masses, averages the sorted profiles and fits
/// a power law to the averaged profile by log-log least squares.
double subset_exponent_estimate(const PowerLawSpec& spec, int subset_size,
                                std::uint64_t seed, int trials);

/// n independent copies of a power law; the joint pmf of a rank vector is
/// prod r_i^-k / H_R(k)^n.
struct ProductPowerLaw {
    PowerLawSpec base;
    int n;

    ProductPowerLaw(PowerLawSpec b, int n_) : base(b), n(n_) {
        if (n < 1) throw std::domain_error("ProductPowerLaw: n must be >= 1");
    }

    double log_pmf(const std::vector<int>& ranks) const;
};

}  // namespace qsd
