#pragma once

#include <cstdint>

#include "qsd/common.hpp"

namespace qsd {

struct RuntimeQuery {
    int R;
    double k;
    int n;

    RuntimeQuery(int R_, double k_, int n_) : R(R_), k(k_), n(n_) {
        if (R < 1 || n < 1 || k < 0)
            throw std::domain_error("RuntimeQuery: need R >= 1, n >= 1, k >= 0");
    }
};

/// Grover query count to amplify a component of the given success
/// probability: (pi/4) * p^(-1/2).
double mlp_queries(double success_prob);

/// RT1(R,k,n) = H_R(k/2)^n / H_R(k)^(n/2), carried in log space.
LogValue rt1(const RuntimeQuery& q);

/// Continuous variant using h_R in place of H_R.
LogValue rt1_continuous(const RuntimeQuery& q);

/// f(R,k) = log(H_R(k/2)/H_R(k)^(1/2)) / log R; RT1 = R^(n*f) identically.
double speedup_exponent(int R, double k);

/// Classical sample complexity for highest-score parse: |Omega|.
double hsp_classical_baseline(std::int64_t num_accepted);

}  // namespace qsd
