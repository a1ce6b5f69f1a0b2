#pragma once

#include <cmath>

#include "qsd/common.hpp"

namespace qsd {

/// Parameters of the truncated product-of-Pareto integral
///   M(R,k1,k2,c,n) = 1/h_R(k1)^n * int_{[1,R]^n} chi(prod r <= c) (prod r)^-k2 dr.
/// The threshold is stored as log c; c itself overflows double for the
/// regimes of interest (c can reach R^n with n ~ 500).
struct TruncatedIntegralSpec {
    int R;
    double k1;
    double k2;
    double log_c;
    int n;

    TruncatedIntegralSpec(int R_, double k1_, double k2_, double c, int n_)
        : TruncatedIntegralSpec(R_, k1_, k2_, std::log(c), n_, FromLog{}) {
        if (!(c > 0)) throw std::domain_error("TruncatedIntegralSpec: c must be > 0");
    }

    static TruncatedIntegralSpec with_log_threshold(int R, double k1, double k2,
                                                    double log_c, int n) {
        return TruncatedIntegralSpec(R, k1, k2, log_c, n, FromLog{});
    }

  private:
    struct FromLog {};
    TruncatedIntegralSpec(int R_, double k1_, double k2_, double log_c_, int n_, FromLog)
        : R(R_), k1(k1_), k2(k2_), log_c(log_c_), n(n_) {
        if (R < 2) throw std::domain_error("TruncatedIntegralSpec: R must be >= 2");
        if (n < 1) throw std::domain_error("TruncatedIntegralSpec: n must be >= 1");
        if (!std::isfinite(log_c)) throw std::domain_error("TruncatedIntegralSpec: log c not finite");
    }
};

/// Result of an extended-precision evaluation. `value` saturates to the
/// double range; `ln` carries the natural log (-inf for a true zero).
struct MValue {
    double value;
    double ln;
    int digits;  // decimal digits at which the precision ladder stabilized
};

/// Closed-form evaluation of M. The alternating binomial sum cancels
/// catastrophically (terms grow like 2^n e^{a'k'n} before collapsing), so the
/// sum runs in MPFR arithmetic on a precision ladder: 50 digits, doubled
/// until two successive evaluations agree to 12 significant digits.
/// Throws singular_exponent_error for |1-k2| < 1e-9 (use m_closed_k1limit)
/// and precision_error if the ladder is exhausted.
MValue m_closed(const TruncatedIntegralSpec& spec);

/// k2 -> 1 limit by Richardson extrapolation of m_closed at
/// k2 = 1 +/- {1e-3, 5e-4, 2.5e-4}.
MValue m_closed_k1limit(const TruncatedIntegralSpec& spec);

/// m_closed with the k2 = 1 singularity routed to m_closed_k1limit.
MValue m_eval(const TruncatedIntegralSpec& spec);

/// Midpoint rule on a per-axis log-spaced grid of `resolution` cells.
/// The integrand factorizes per cell, so the n-dimensional sum is evaluated
/// by convolving per-axis cell weights; this equals the direct n-fold
/// midpoint sum term for term. Validation oracle for m_closed; refuses n > 6.
double m_bruteforce(const TruncatedIntegralSpec& spec, int resolution);

/// Unnormalized volume of {prod r <= c} in [1,R]^n:
/// h_R(0)^n * M(R,0,0,c,n) = (R-1)^n * M.
LogValue hypothesis_count(int R, double log_c, int n);

struct Rt2Config {
    double c1 = 1.0;
    double c2 = 1.0;
};

struct Rt2Breakdown {
    LogValue total;    // c1*rt + c2*sqrt(n)*rt'
    LogValue rt_term;  // sqrt(h_R(k)^n) * M(R,k,k/2,c*,n)
    double rt_prime;   // 1 - M(R,k,k,c*,n)
    double log_c_star;
};

/// Full expected-query bound split at the Grover fallback threshold
/// c* = (R/h_R(k))^(n/k).
Rt2Breakdown rt2_full(int R, double k, int n, Rt2Config cfg = {});

}  // namespace qsd
