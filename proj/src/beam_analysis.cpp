#include "qsd/beam_analysis.hpp"

#include <cmath>
#include <numbers>

#include "qsd/closed_form.hpp"
#include "qsd/powerlaw.hpp"

namespace qsd {

double beam_log_threshold(int R, double k, int n, double f_split) {
    if (!(k > 0)) throw std::domain_error("beam_log_threshold: k must be > 0");
    const double h = continuous_h(R, k);
    return (n * f_split / k) * (std::log(static_cast<double>(R)) - std::log(h));
}

double retained_mass(int R, double k, int n, double f_split) {
    const double log_c = beam_log_threshold(R, k, n, f_split);
    return m_eval(TruncatedIntegralSpec::with_log_threshold(R, k, k, log_c, n)).value;
}

double optimize_fsplit(int R, double k, int n, double c0) {
    if (!(c0 > 0) || c0 > 1) throw std::domain_error("optimize_fsplit: c0 must be in (0,1]");
    constexpr double kLo = 1e-6, kHi = 1.0, kTol = 1e-6;
    if (retained_mass(R, k, n, kHi) < c0) return kHi;  // boundary clamp
    double lo = kLo, hi = kHi;
    while (hi - lo > kTol) {
        const double mid = 0.5 * (lo + hi);
        if (retained_mass(R, k, n, mid) >= c0)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

LogValue retained_hypotheses(int R, double k, int n, double f_split) {
    if (!(f_split > 0)) throw std::domain_error("retained_hypotheses: f_split must be > 0");
    return hypothesis_count(R, beam_log_threshold(R, k, n, f_split), n);
}

LogValue beam_runtime_bound(int R, double k, int n, double f_split, double g) {
    if (!(g > 0) || g > 1) throw std::domain_error("beam_runtime_bound: g must be in (0,1]");
    const double log_c = beam_log_threshold(R, k, n, f_split);
    const auto m = m_eval(TruncatedIntegralSpec::with_log_threshold(R, k, k / 2.0, log_c, n));
    const double h = continuous_h(R, k);
    return LogValue::from_ln(-0.5 * std::log(g) + 0.5 * n * std::log(h) + m.ln);
}

int amplification_rounds(double c0) {
    if (!(c0 > 0) || c0 > 1) throw std::domain_error("amplification_rounds: c0 in (0,1]");
    return static_cast<int>(
        std::ceil(std::numbers::pi / 4.0 / std::asin(std::sqrt(c0)) - 0.5));
}

int amplification_rounds_sqrt_convention(double c0) {
    if (!(c0 > 0) || c0 > 1) throw std::domain_error("amplification_rounds: c0 in (0,1]");
    return static_cast<int>(std::ceil(std::sqrt(1.0 / c0)));
}

std::vector<BeamSweepPoint> capped_width_sweep(int R, double k, double log10_n_max,
                                               std::span<const int> n_values) {
    if (!(log10_n_max >= 0)) throw std::domain_error("capped_width_sweep: N_max must be >= 1");
    const double h = continuous_h(R, k);
    const double log_rh = std::log(static_cast<double>(R)) - std::log(h);
    // c = R^n corresponds to this f_split; beyond it the beam is saturated
    const double f_full_factor = k * std::log(static_cast<double>(R)) / log_rh;

    std::vector<BeamSweepPoint> out(n_values.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        const int n = n_values[i];
        const double full_log10 = n * std::log10(static_cast<double>(R - 1));
        BeamSweepPoint pt;
        pt.n = n;
        if (log10_n_max >= full_log10) {
            pt.saturated = true;
            pt.f_split = f_full_factor;
            pt.log10_n_hyp = full_log10;
            pt.log10_retained_mass = 0.0;
            const double log_c = n * std::log(static_cast<double>(R));
            const auto m =
                m_eval(TruncatedIntegralSpec::with_log_threshold(R, k, k / 2.0, log_c, n));
            pt.log10_runtime = (0.5 * n * std::log(h) + m.ln) / std::numbers::ln10;
        } else {
            pt.saturated = false;
            double lo = 1e-6, hi = f_full_factor;
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                if (retained_hypotheses(R, k, n, mid).log10() >= log10_n_max)
                    hi = mid;
                else
                    lo = mid;
            }
            pt.f_split = hi;
            pt.log10_n_hyp = retained_hypotheses(R, k, n, hi).log10();
            const double mass = retained_mass(R, k, n, hi);
            pt.log10_retained_mass = std::log10(mass);
            pt.log10_runtime = beam_runtime_bound(R, k, n, hi, std::min(mass, 1.0)).log10();
        }
        out[i] = pt;
    }
    return out;
}

}  // namespace qsd
