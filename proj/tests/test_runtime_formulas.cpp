#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsd/powerlaw.hpp"
#include "qsd/runtime_formulas.hpp"

using namespace qsd;

TEST_CASE("mlp_queries") {
    CHECK(mlp_queries(1.0) == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-15));
    CHECK(mlp_queries(0.25) == doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-15));
    // Cor. 2 at R=3, k=2, n=2: success prob H_3(2)^-2 = (36/49)^2
    const double p = std::pow(36.0 / 49.0, 2);
    CHECK(mlp_queries(p) == doctest::Approx(std::numbers::pi / 4.0 * 49.0 / 36.0).epsilon(1e-14));
    CHECK_THROWS_AS(mlp_queries(0.0), std::domain_error);
    CHECK_THROWS_AS(mlp_queries(-1.0), std::domain_error);
}

TEST_CASE("rt1 exact values") {
    CHECK(rt1(RuntimeQuery(1, 2.0, 10)).linear() == doctest::Approx(1.0).epsilon(1e-14));
    // H_3(1) = 11/6, sqrt(H_3(2)) = 7/6
    CHECK(rt1(RuntimeQuery(3, 2.0, 2)).linear() ==
          doctest::Approx(121.0 / 49.0).epsilon(1e-13));
    // k = 0 reduces to Grover
    CHECK(rt1(RuntimeQuery(7, 0.0, 4)).linear() == doctest::Approx(49.0).epsilon(1e-13));
    // log space survives n = 500 at R = 100
    const double l10 = rt1(RuntimeQuery(100, 0.0, 500)).log10();
    CHECK(l10 == doctest::Approx(500.0).epsilon(1e-12));
}

TEST_CASE("speedup exponent") {
    CHECK(speedup_exponent(2, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(speedup_exponent(57, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(speedup_exponent(3, 2.0) ==
          doctest::Approx(std::log(11.0 / 7.0) / std::log(3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(speedup_exponent(1, 2.0), std::domain_error);
}

TEST_CASE("rt1 == R^(n f) identity") {
    for (int R : {2, 3, 10, 60})
        for (double k : {0.0, 0.5, 1.0, 2.91, 7.0})
            for (int n : {1, 5, 40}) {
                const double lhs = rt1(RuntimeQuery(R, k, n)).ln;
                const double rhs = n * speedup_exponent(R, k) * std::log(static_cast<double>(R));
                CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
            }
}

TEST_CASE("speedup exponent bounds and monotonicity (Cor. 4 / Fig. 1)") {
    for (int R : {3, 5, 10, 15, 20, 30, 40, 60, 100}) {
        double prev = speedup_exponent(R, 0.0);
        CHECK(prev == doctest::Approx(0.5).epsilon(1e-13));
        for (double k = 0.05; k <= 10.0 + 1e-9; k += 0.05) {
            const double f = speedup_exponent(R, k);
            CHECK(f > 0.0);
            CHECK(f < 0.5);
            CHECK(f < prev);
            prev = f;
        }
    }
}

TEST_CASE("rt1_continuous") {
    // h_2(2) = 1/2, h_2(4) = 7/24
    CHECK(rt1_continuous(RuntimeQuery(2, 4.0, 1)).linear() ==
          doctest::Approx(0.5 / std::sqrt(7.0 / 24.0)).epsilon(1e-13));
    CHECK(rt1_continuous(RuntimeQuery(2, 0.0, 2)).linear() == doctest::Approx(1.0).epsilon(1e-13));
    // tracks rt1 within a modest per-step factor (Fig. 3)
    for (int n : {1, 10, 40}) {
        const double d = rt1(RuntimeQuery(10, 2.0, n)).ln;
        const double c = rt1_continuous(RuntimeQuery(10, 2.0, n)).ln;
        CHECK(std::abs(d - c) / n < 0.1);
    }
}

TEST_CASE("hsp classical baseline") {
    CHECK(hsp_classical_baseline(1) == 1.0);
    CHECK(hsp_classical_baseline(81) == 81.0);
    CHECK_THROWS_AS(hsp_classical_baseline(0), std::domain_error);
}
