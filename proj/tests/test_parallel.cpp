#include <doctest.h>
#include <omp.h>

#include <random>

#include "qsd/common.hpp"
#include "qsd/parallel.hpp"

using namespace qsd;

namespace {

std::vector<par::cplx> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<par::cplx> v(n);
    for (auto& x : v) x = {2.0 * next_canonical(rng) - 1.0, 2.0 * next_canonical(rng) - 1.0};
    return v;
}

}  // namespace

TEST_CASE("parallel kernels match serial reference") {
    for (std::size_t n : {1ul, 7ul, 64ul, 1000ul, 65536ul}) {
        auto a = random_vec(n, 1 + n);
        auto b = random_vec(n, 2 + n);

        const auto ds = par::dot_serial(a, b);
        const auto dp = par::dot(a, b);
        CHECK(std::abs(ds - dp) <= 1e-12 * (1.0 + std::abs(ds)));

        CHECK(par::norm2(a) == doctest::Approx(par::norm2_serial(a)).epsilon(1e-13));

        auto s1 = a;
        auto s2 = a;
        par::reflect_serial(b, ds, s1);
        par::reflect(b, ds, s2);
        for (std::size_t i = 0; i < n; ++i) CHECK(s1[i] == s2[i]);
    }
}

TEST_CASE("chunked reductions are invariant under thread count") {
    auto a = random_vec(10000, 5);
    auto b = random_vec(10000, 6);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto d1 = par::dot(a, b);
    const double n1 = par::norm2(a);
    omp_set_num_threads(4);
    const auto d4 = par::dot(a, b);
    const double n4 = par::norm2(a);
    omp_set_num_threads(saved);
    CHECK(d1.real() == d4.real());
    CHECK(d1.imag() == d4.imag());
    CHECK(n1 == n4);
}
