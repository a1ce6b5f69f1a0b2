#include "qsd/runtime_formulas.hpp"

#include <cmath>
#include <numbers>

#include "qsd/powerlaw.hpp"

namespace qsd {

double mlp_queries(double success_prob) {
    if (!(success_prob > 0.0) || success_prob > 1.0)
        throw std::domain_error("mlp_queries: success_prob must be in (0,1]");
    return std::numbers::pi / 4.0 / std::sqrt(success_prob);
}

LogValue rt1(const RuntimeQuery& q) {
    const double lh_half = std::log(harmonic_number(q.R, q.k / 2.0));
    const double lh_full = std::log(harmonic_number(q.R, q.k));
    return LogValue::from_ln(q.n * lh_half - 0.5 * q.n * lh_full);
}

LogValue rt1_continuous(const RuntimeQuery& q) {
    if (q.R < 2) throw std::domain_error("rt1_continuous: R must be >= 2");
    const double lh_half = std::log(continuous_h(q.R, q.k / 2.0));
    const double lh_full = std::log(continuous_h(q.R, q.k));
    return LogValue::from_ln(q.n * lh_half - 0.5 * q.n * lh_full);
}

double speedup_exponent(int R, double k) {
    if (R < 2) throw std::domain_error("speedup_exponent: R must be >= 2 (log R = 0 at R = 1)");
    if (k < 0) throw std::domain_error("speedup_exponent: k must be >= 0");
    const double lh_half = std::log(harmonic_number(R, k / 2.0));
    const double lh_full = std::log(harmonic_number(R, k));
    return (lh_half - 0.5 * lh_full) / std::log(static_cast<double>(R));
}

double hsp_classical_baseline(std::int64_t num_accepted) {
    if (num_accepted < 1) throw std::domain_error("hsp_classical_baseline: need >= 1 accepted");
    return static_cast<double>(num_accepted);
}

}  // namespace qsd
