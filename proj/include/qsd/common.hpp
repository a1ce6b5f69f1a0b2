#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsd {

/// A nonnegative quantity carried as its natural logarithm, so that values
/// like R^(n/2) survive n ~ 500 without overflow. `ln` is -inf for zero.
struct LogValue {
    double ln = -std::numeric_limits<double>::infinity();

    static LogValue from_ln(double l) { return LogValue{l}; }
    static LogValue from_linear(double v) {
        if (v < 0) throw std::domain_error("LogValue: negative value");
        return LogValue{std::log(v)};
    }

    bool is_zero() const { return std::isinf(ln) && ln < 0; }
    double log10() const { return ln / std::numbers::ln10; }
    /// Linear value; saturates to +inf if out of double range.
    double linear() const { return std::exp(ln); }

    LogValue operator*(LogValue o) const { return LogValue{ln + o.ln}; }
    LogValue operator/(LogValue o) const { return LogValue{ln - o.ln}; }
    LogValue pow(double e) const { return LogValue{ln * e}; }
    LogValue operator+(LogValue o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        double hi = std::max(ln, o.ln), lo = std::min(ln, o.ln);
        return LogValue{hi + std::log1p(std::exp(lo - hi))};
    }
};

struct enumeration_overflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct empty_language_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct singular_exponent_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Compensated (Kahan) accumulator.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

/// splitmix64; used to derive independent sub-seeds from one root seed.
inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) {
    std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in [0,1) from a 64-bit generator, bit-identical across
/// platforms (unlike std::uniform_real_distribution).
template <typename Rng>
double next_canonical(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qsd
