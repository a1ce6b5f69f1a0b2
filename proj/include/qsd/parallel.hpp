#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <vector>

// Deterministic data-parallel kernels. Reductions accumulate into a fixed
// number of chunks combined in chunk order, so results are bit-identical for
// any OMP thread count. Serial reference versions are kept for the test
// suite and the benchmark.

namespace qsd::par {

inline constexpr std::size_t kReduceChunks = 64;

using cplx = std::complex<double>;

inline cplx dot_serial(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline cplx dot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    const std::size_t n = a.size();
    cplx partial[kReduceChunks] = {};
    const std::size_t step = (n + kReduceChunks - 1) / kReduceChunks;
#pragma omp parallel for schedule(static)
    for (std::size_t c = 0; c < kReduceChunks; ++c) {
        const std::size_t lo = c * step;
        const std::size_t hi = std::min(n, lo + step);
        cplx acc{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i) acc += std::conj(a[i]) * b[i];
        partial[c] = acc;
    }
    cplx total{0.0, 0.0};
    for (std::size_t c = 0; c < kReduceChunks; ++c) total += partial[c];
    return total;
}

// state <- 2*overlap*prep - state
inline void reflect_serial(const std::vector<cplx>& prep, cplx overlap, std::vector<cplx>& state) {
    const cplx two_ov = 2.0 * overlap;
    for (std::size_t i = 0; i < state.size(); ++i) state[i] = two_ov * prep[i] - state[i];
}

inline void reflect(const std::vector<cplx>& prep, cplx overlap, std::vector<cplx>& state) {
    const cplx two_ov = 2.0 * overlap;
    const std::size_t n = state.size();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) state[i] = two_ov * prep[i] - state[i];
}

inline double norm2_serial(const std::vector<cplx>& a) {
    double acc = 0.0;
    for (const cplx& v : a) acc += std::norm(v);
    return acc;
}

inline double norm2(const std::vector<cplx>& a) {
    const std::size_t n = a.size();
    double partial[kReduceChunks] = {};
    const std::size_t step = (n + kReduceChunks - 1) / kReduceChunks;
#pragma omp parallel for schedule(static)
    for (std::size_t c = 0; c < kReduceChunks; ++c) {
        const std::size_t lo = c * step;
        const std::size_t hi = std::min(n, lo + step);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) acc += std::norm(a[i]);
        partial[c] = acc;
    }
    double total = 0.0;
    for (std::size_t c = 0; c < kReduceChunks; ++c) total += partial[c];
    return total;
}

}  // namespace qsd::par
