// test_specfun.cpp — reciprocal Gamma and Mittag-Leffler

#include "doctest.h"

#include <cmath>

#include "edgedecay/specfun.hpp"

using namespace edgedecay;

TEST_CASE("reciprocal gamma at integers and half-integers") {
    CHECK(reciprocal_gamma(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(reciprocal_gamma(5.0) == doctest::Approx(1.0 / 24).epsilon(1e-14));
    CHECK(reciprocal_gamma(0.5) == doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-14));
    CHECK(reciprocal_gamma(-0.5) == doctest::Approx(-0.5 / std::sqrt(kPi)).epsilon(1e-14));
    for (int n = 0; n <= 6; ++n) {
        CHECK(reciprocal_gamma(double(-n)) == 0.0);
        CHECK(reciprocal_gamma(Complex(-n, 0.0)) == Complex(0.0, 0.0));
    }
    CHECK(std::abs(reciprocal_gamma(Complex(3.0, 0.0)) - 0.5) < 1e-15);
}

TEST_CASE("reflection identity on a 100-point complex grid") {
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const Complex z(-4.7 + 0.95 * i, -2.3 + 0.5 * j);
            const Complex lhs = reciprocal_gamma(z) * reciprocal_gamma(1.0 - z);
            const Complex rhs = std::sin(kPi * z) / kPi;
            worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("recurrence 1/Γ(z) = z/Γ(z+1)") {
    for (const Complex z : {Complex(0.3, 0.2), Complex(-2.5, 1.0), Complex(7.2, -3.1)}) {
        CHECK(std::abs(reciprocal_gamma(z) - z * reciprocal_gamma(z + 1.0)) <= 1e-13 * std::abs(reciprocal_gamma(z)));
    }
}

TEST_CASE("Mittag-Leffler reduces to the exponential") {
    for (const Complex z : {Complex(0.5, 0), Complex(-3, 0), Complex(2, 1.5), Complex(-10, 4), Complex(0, 8)}) {
        const MLValue v = mittag_leffler({1, 1, 1}, z);
        CHECK(std::abs(v.value - std::exp(z)) <= 1e-12 * std::max(1.0, std::abs(std::exp(z))));
    }
}

TEST_CASE("Mittag-Leffler reduces to the cosine") {
    for (double x : {0.0, 0.5, 1.0, 2.0, 4.5}) {
        const MLValue v = mittag_leffler({2, 1, 1}, Complex(-x * x, 0));
        CHECK(std::abs(v.value - std::cos(x)) <= 1e-12);
    }
}

TEST_CASE("Mittag-Leffler at 0 is 1/Γ(β)") {
    for (double beta : {0.5, 1.0, 2.5, 7.0, 13.25}) {
        for (double gamma : {1.0, 2.0, 3.5}) {
            const MLValue v = mittag_leffler({0.75, beta, gamma}, Complex(0, 0));
            CHECK(std::abs(v.value - reciprocal_gamma(beta)) <= 1e-12 * std::max(1e-300, reciprocal_gamma(beta)));
        }
    }
}

TEST_CASE("three-parameter value against mpmath") {
    const MLValue v = mittag_leffler({2, 3, 2}, Complex(-1, 0));
    CHECK(std::abs(v.value - 0.420735492403948253) < 1e-14);
}

TEST_CASE("E_{1,2}(z) = (e^z − 1)/z") {
    for (const Complex z : {Complex(0.7, 0), Complex(-4, 2), Complex(3, -1)}) {
        CHECK(std::abs(mittag_leffler({1, 2, 1}, z).value - (std::exp(z) - 1.0) / z) <= 1e-12 * std::abs(std::exp(z)));
    }
}

TEST_CASE("term recurrence matches the summed series") {
    const MLParams p{0.5, 1.75, 2.0};
    const Complex z(-0.8, 0.3);
    Complex sum = 0.0;
    for (int n = 0; n < 80; ++n) sum += mittag_leffler_term(p, z, n);
    CHECK(std::abs(sum - mittag_leffler(p, z).value) < 1e-13);
    // ratio of consecutive terms: (γ+n) z Γ(αn+β) / ((n+1) Γ(α(n+1)+β))
    for (int n = 0; n < 10; ++n) {
        const Complex r = mittag_leffler_term(p, z, n + 1) / mittag_leffler_term(p, z, n);
        const Complex expect = (p.gamma + n) * z / double(n + 1) * reciprocal_gamma(p.alpha * (n + 1) + p.beta) /
                               reciprocal_gamma(p.alpha * n + p.beta);
        CHECK(std::abs(r - expect) < 1e-12 * std::abs(expect));
    }
}

TEST_CASE("scaled form equals Γ(β) E") {
    const MLParams p{2, 5.5, 3};
    const Complex z(-2.0, 0.5);
    const ScaledML s = mittag_leffler_scaled(p, std::complex<long double>(z.real(), z.imag()));
    const Complex direct = mittag_leffler(p, z).value / reciprocal_gamma(p.beta);
    CHECK(std::abs(Complex(double(s.value.real()), double(s.value.imag())) - direct) < 1e-12 * std::abs(direct));
    CHECK(s.abs_sum >= std::abs(s.value));
}

TEST_CASE("refusals") {
    CHECK_THROWS_AS(mittag_leffler({0, 1, 1}, Complex(1, 0)), ConfigError);
    CHECK_THROWS_AS(mittag_leffler({1, -1, 1}, Complex(1, 0)), ConfigError);
    CHECK_THROWS_AS(mittag_leffler({1, 1, 1}, Complex(60, 0)), ConvergenceError);
    MLOptions tight;
    tight.max_terms = 3;
    CHECK_THROWS_AS(mittag_leffler({1, 1, 1}, Complex(5, 0), tight), ConvergenceError);
    // e^{−40} by its Taylor series loses everything to cancellation
    CHECK_THROWS_AS(mittag_leffler({1, 1, 1}, Complex(-40, 0)), ConvergenceError);
}

TEST_CASE("log gamma") {
    CHECK(log_gamma(10.0) == doctest::Approx(std::log(362880.0)).epsilon(1e-14));
    CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
}
