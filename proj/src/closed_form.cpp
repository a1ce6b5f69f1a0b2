#include "qsd/closed_form.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <vector>

#include "qsd/powerlaw.hpp"

namespace qsd {

namespace {

namespace bmp = boost::multiprecision;
using big = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;

constexpr int kStartDigits = 50;
constexpr int kMaxDigits = 6400;
constexpr double kLadderRelTol = 1e-12;

big big_continuous_h(int R, double k, unsigned digits) {
    const big Rb(R);
    const big u = big(1) - big(k);
    if (abs(u) < 1e-30) return log(Rb);
    (void)digits;
    return (pow(Rb, u) - 1) / u;
}

struct SumResult {
    big value;
    big max_term;  // scale of the largest summand, for the noise floor
};

// The Lemma-10 double sum at fixed working precision. Note two sign fixes
// relative to the displayed closed form: the (-1)^j factor inside the sum
// and e^{+c'k'} in front of the truncated exponential series; both follow
// from the residue derivation and are confirmed by the quadrature oracle.
SumResult lemma10_sum(const TruncatedIntegralSpec& spec, unsigned digits) {
    big::default_precision(digits);
    const int n = spec.n;
    const big ap = log(big(spec.R));
    const big cp(spec.log_c);
    const big kp = big(1) - big(spec.k2);

    const int jmax = std::min<long>(n, static_cast<long>(mpfr_get_si(
        static_cast<big>(floor(cp / ap)).backend().data(), MPFR_RNDD)));

    std::vector<big> terms(static_cast<std::size_t>(jmax) + 1);
    std::vector<big> magnitudes(static_cast<std::size_t>(jmax) + 1);

#pragma omp parallel
    {
        big::default_precision(digits);
#pragma omp for schedule(dynamic)
        for (int j = 0; j <= jmax; ++j) {
            const big x = (ap * j - cp) * kp;
            // truncated exponential sum_{l<n} x^l / l!
            big trunc = 0, pw = 1;
            for (int l = 0; l < n; ++l) {
                trunc += pw;
                pw *= x / (l + 1);
            }
            // binom(n, j)
            big binom = 1;
            for (int i = 1; i <= j; ++i) binom = binom * (n - i + 1) / i;
            const big lead = exp(ap * kp * j);
            const big tail = exp(cp * kp) * trunc;
            big t = binom * (lead - tail);
            if (j & 1) t = -t;
            terms[j] = t;
            magnitudes[j] = binom * (abs(lead) + abs(tail));
        }
    }
    big::default_precision(digits);
    big total = 0, max_mag = 0;
    for (int j = 0; j <= jmax; ++j) {
        total += terms[j];
        if (magnitudes[j] > max_mag) max_mag = magnitudes[j];
    }
    return {total, max_mag};
}

// Full evaluation of M at fixed precision; also reports the cancellation
// noise floor in the same units as the result.
struct Eval {
    big value;
    big noise;
};

Eval eval_m(const TruncatedIntegralSpec& spec, unsigned digits) {
    big::default_precision(digits);
    const int n = spec.n;
    const big hk1 = big_continuous_h(spec.R, spec.k1, digits);

    // Full domain: the indicator is identically 1 and the integral separates,
    // M = (h_R(k2)/h_R(k1))^n with no cancellation.
    if (spec.log_c >= n * std::log(static_cast<double>(spec.R))) {
        const big hk2 = big_continuous_h(spec.R, spec.k2, digits);
        return {pow(hk2 / hk1, n), big(0)};
    }

    SumResult s = lemma10_sum(spec, digits);
    const big kp = big(1) - big(spec.k2);
    big denom = pow(kp, n) * pow(hk1, n);
    if (n & 1) denom = -denom;
    return {s.value / denom, s.max_term / abs(denom) * pow(big(10), -static_cast<int>(digits) + 2)};
}

MValue to_mvalue(const big& v, int digits) {
    MValue out;
    out.value = v.convert_to<double>();
    out.ln = (v > 0) ? static_cast<big>(log(v)).convert_to<double>()
                     : -std::numeric_limits<double>::infinity();
    out.digits = digits;
    return out;
}

MValue m_closed_impl(const TruncatedIntegralSpec& spec) {
    if (spec.log_c <= 0.0) return {0.0, -std::numeric_limits<double>::infinity(), kStartDigits};

    int digits = kStartDigits;
    Eval prev = eval_m(spec, digits);
    while (digits < kMaxDigits) {
        const int next = digits * 2;
        Eval cur = eval_m(spec, next);
        const big diff = abs(cur.value - prev.value);
        const big acur = abs(cur.value);
        const big aprev = abs(prev.value);
        const big scale = (acur > aprev) ? acur : aprev;
        const bool agree = diff <= kLadderRelTol * scale || (cur.value == 0 && prev.value == 0);
        if (agree && cur.value >= 0) return to_mvalue(cur.value, next);
        if (agree && cur.value < 0 && abs(cur.value) <= cur.noise)
            return {0.0, -std::numeric_limits<double>::infinity(), next};
        prev = cur;
        digits = next;
    }
    if (prev.value < 0 && abs(prev.value) <= prev.noise)
        return {0.0, -std::numeric_limits<double>::infinity(), digits};
    throw precision_error("m_closed: precision ladder exhausted at " +
                          std::to_string(digits) + " digits");
}

}  // namespace

MValue m_closed(const TruncatedIntegralSpec& spec) {
    if (std::abs(1.0 - spec.k2) < 1e-9)
        throw singular_exponent_error("m_closed: k2 = 1 is singular, use m_closed_k1limit");
    return m_closed_impl(spec);
}

MValue m_closed_k1limit(const TruncatedIntegralSpec& spec) {
    if (std::abs(1.0 - spec.k2) >= 1e-9)
        throw std::domain_error("m_closed_k1limit: expects k2 = 1");
    const double offsets[3] = {1e-3, 5e-4, 2.5e-4};
    double a[3];
    int digits = kStartDigits;
    for (int i = 0; i < 3; ++i) {
        auto up = m_closed_impl(TruncatedIntegralSpec::with_log_threshold(
            spec.R, spec.k1, 1.0 + offsets[i], spec.log_c, spec.n));
        auto dn = m_closed_impl(TruncatedIntegralSpec::with_log_threshold(
            spec.R, spec.k1, 1.0 - offsets[i], spec.log_c, spec.n));
        a[i] = 0.5 * (up.value + dn.value);
        digits = std::max({digits, up.digits, dn.digits});
    }
    // central differences are O(h^2); two Richardson stages
    const double b0 = (4.0 * a[1] - a[0]) / 3.0;
    const double b1 = (4.0 * a[2] - a[1]) / 3.0;
    double v = (16.0 * b1 - b0) / 15.0;
    if (v < 0 && v > -1e-12) v = 0.0;
    MValue out;
    out.value = v;
    out.ln = (v > 0) ? std::log(v) : -std::numeric_limits<double>::infinity();
    out.digits = digits;
    return out;
}

double m_bruteforce(const TruncatedIntegralSpec& spec, int resolution) {
    if (spec.n > 6)
        throw std::domain_error("m_bruteforce: unreliable for n > 6, refusing");
    if (resolution < 64) throw std::domain_error("m_bruteforce: resolution must be >= 64");
    if (spec.log_c <= 0.0) return 0.0;

    const int n = spec.n;
    const int m = resolution;
    const double ap = std::log(static_cast<double>(spec.R));
    const double step = ap / m;
    const double h1 = continuous_h(spec.R, spec.k1);

    std::vector<double> w(m);
    for (int j = 0; j < m; ++j) {
        const double zmid = (j + 0.5) * step;
        w[j] = std::exp(-spec.k2 * zmid) * (std::exp((j + 1) * step) - std::exp(j * step));
    }

    if (spec.log_c >= n * ap) {
        KahanSum acc;
        for (double v : w) acc.add(v);
        return std::pow(acc.value() / h1, n);
    }

    // Midpoint product <= c  <=>  sum of cell indices <= smax.
    const long smax = static_cast<long>(std::floor(spec.log_c / step - n / 2.0 + 1e-12));
    if (smax < 0) return 0.0;

    // Convolve the first n-1 axes; the last axis only needs the cumulative
    // weight below smax, which a prefix sum over dist provides in O(m).
    std::vector<double> dist{1.0};
    for (int axis = 0; axis < n - 1; ++axis) {
        const long cap = std::min<long>(static_cast<long>(dist.size()) - 1 + (m - 1), smax);
        std::vector<double> next(static_cast<std::size_t>(cap) + 1, 0.0);
        const long dlen = static_cast<long>(dist.size());
#pragma omp parallel for schedule(static)
        for (long s = 0; s <= cap; ++s) {
            double acc = 0.0;
            const long jlo = std::max<long>(0, s - (dlen - 1));
            const long jhi = std::min<long>(m - 1, s);
            for (long j = jlo; j <= jhi; ++j) acc += w[j] * dist[s - j];
            next[s] = acc;
        }
        dist = std::move(next);
    }
    std::vector<double> prefix(dist.size() + 1, 0.0);
    {
        KahanSum acc;
        for (std::size_t i = 0; i < dist.size(); ++i) {
            acc.add(dist[i]);
            prefix[i + 1] = acc.value();
        }
    }
    KahanSum total;
    for (long j = 0; j < m && j <= smax; ++j) {
        const long avail = std::min<long>(smax - j, static_cast<long>(dist.size()) - 1);
        total.add(w[j] * prefix[avail + 1]);
    }
    return total.value() / std::pow(h1, n);
}

MValue m_eval(const TruncatedIntegralSpec& spec) {
    if (std::abs(1.0 - spec.k2) < 1e-9) return m_closed_k1limit(spec);
    return m_closed(spec);
}

LogValue hypothesis_count(int R, double log_c, int n) {
    auto m = m_closed(TruncatedIntegralSpec::with_log_threshold(R, 0.0, 0.0, log_c, n));
    return LogValue::from_ln(n * std::log(static_cast<double>(R - 1)) + m.ln);
}

Rt2Breakdown rt2_full(int R, double k, int n, Rt2Config cfg) {
    if (R < 2 || !(k > 0)) throw std::domain_error("rt2_full: need R >= 2, k > 0");
    const double h = continuous_h(R, k);
    const double log_c_star = (n / k) * (std::log(static_cast<double>(R)) - std::log(h));

    auto m_rt = m_eval(TruncatedIntegralSpec::with_log_threshold(R, k, k / 2.0, log_c_star, n));
    auto m_mass = m_eval(TruncatedIntegralSpec::with_log_threshold(R, k, k, log_c_star, n));

    Rt2Breakdown out;
    out.log_c_star = log_c_star;
    out.rt_term = LogValue::from_ln(0.5 * n * std::log(h) + m_rt.ln);
    out.rt_prime = std::clamp(1.0 - m_mass.value, 0.0, 1.0);
    LogValue first = LogValue::from_ln(std::log(cfg.c1) + out.rt_term.ln);
    LogValue second = (out.rt_prime > 0)
                          ? LogValue::from_ln(std::log(cfg.c2) + 0.5 * std::log(static_cast<double>(n)) +
                                              std::log(out.rt_prime))
                          : LogValue{};
    out.total = first + second;
    return out;
}

}  // namespace qsd
