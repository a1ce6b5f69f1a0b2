#pragma once

#include <span>
#include <vector>

#include "qsd/common.hpp"

namespace qsd {

/// log of the cutoff threshold c = (R/h_R(k))^(n*f_split/k) on the product
/// of ranks; f_split interconverts with the probability cutoff p0.
double beam_log_threshold(int R, double k, int n, double f_split);

/// Smallest f_split in [1e-6, 1] with retained mass
/// M(R,k,k,c(f_split),n) >= c0, by bisection to 1e-6. Clamps to 1 when even
/// the full range of f_split cannot retain c0 (c(1) = c* < R^n, so M(1) < 1;
/// c0 = 1 is the boundary case).
double optimize_fsplit(int R, double k, int n, double c0);

/// Retained mass M(R,k,k,c(f_split),n).
double retained_mass(int R, double k, int n, double f_split);

/// Hypothesis count above the cutoff: the k -> 0 counting limit,
/// (R-1)^n * M(R,0,0,c(f_split),n).
LogValue retained_hypotheses(int R, double k, int n, double f_split);

/// g^(-1/2) * sqrt(h_R(k)^n) * M(R,k,k/2,c(f_split),n).
LogValue beam_runtime_bound(int R, double k, int n, double f_split, double g);

/// Amplification round count implied by a retained fraction c0:
/// ceil((pi/4)/asin(sqrt(c0)) - 1/2), and the paper's sqrt(1/c0) accounting.
int amplification_rounds(double c0);
int amplification_rounds_sqrt_convention(double c0);

struct BeamSweepPoint {
    int n;
    double f_split;
    double log10_n_hyp;
    double log10_retained_mass;
    double log10_runtime;
    bool saturated;  // beam holds the full hypothesis volume
};

/// For each n: cutoff where the retained count equals min(N_max, full
/// volume), runtime bound with the post-amplification factor from the
/// retained mass. Saturated points evaluate at c = R^n exactly, where the
/// runtime equals the unpruned rt term of rt2_full.
std::vector<BeamSweepPoint> capped_width_sweep(int R, double k, double log10_n_max,
                                               std::span<const int> n_values);

}  // namespace qsd
