// test_reservoir.cpp — derived constants, correlation function and its antiderivatives

#include "doctest.h"

#include <cmath>
#include <random>

#include "edgedecay/reservoir.hpp"

using namespace edgedecay;

namespace {

const ReservoirConfig base{1.0, 1.0, 0.5, 1.0};

}  // namespace

TEST_CASE("configuration bounds") {
    CHECK_THROWS_AS(ReservoirConfig(0.0, 1, 0.5, 1), ConfigError);
    CHECK_THROWS_AS(ReservoirConfig(1, -1, 0.5, 1), ConfigError);
    CHECK_THROWS_AS(ReservoirConfig(1, 1, 1.5, 1), ConfigError);
    CHECK_THROWS_AS(ReservoirConfig(1, 1, 0.0, 1), ConfigError);
    CHECK_THROWS_AS(ReservoirConfig(1, 1, 0.5, 0.0), ConfigError);
    CHECK_THROWS_AS(ReservoirConfig(1, 1, NAN, 1), ConfigError);
    try {
        ReservoirConfig(1, 1, 1.5, 1);
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }
    CHECK(base.with_A(3.0).A() == 3.0);
    CHECK(base.with_A(3.0).alpha() == 0.5);
}

TEST_CASE("derived constants at A = a = 1, alpha = 1/2") {
    const ReservoirParams p = derive_params(base);
    const double pi = kPi;
    CHECK(p.z0.real() == doctest::Approx(0.0));
    CHECK(p.z0.imag() == doctest::Approx(pi * std::sqrt(2.0)).epsilon(1e-14));
    // −2iπ e^{−iπ/4}/sin(π/2)
    const Complex za = Complex(0, -2 * pi) * std::polar(1.0, -pi / 4);
    CHECK(std::abs(p.z_alpha - za) < 1e-13);
    CHECK(p.z1 == doctest::Approx(pi * std::sqrt(2.0) - 1.0).epsilon(1e-14));
    CHECK(p.A_star == doctest::Approx(std::cos(pi / 4) / pi).epsilon(1e-14));
    CHECK(p.A_star == doctest::Approx(0.2251).epsilon(1e-3));
    // candidates {1, |3/z0|^{1/3}, |3 z_α/z0|², 3|z1/z0|} = {1, 0.877, 18, 2.32}
    CHECK(p.tau == doctest::Approx(18.0).epsilon(1e-13));
    CHECK(p.Omega_alpha == doctest::Approx(1.0 + std::sqrt(1.0 / 3.0)).epsilon(1e-14));
    CHECK(p.M_alpha == doctest::Approx(std::pow(0.5, 0.25) * std::pow(1.5, 0.75)).epsilon(1e-14));
    CHECK(spectral_density(p.Omega_alpha, base) == doctest::Approx(p.M_alpha).epsilon(1e-13));
}

TEST_CASE("typeset constants for audit") {
    const Complex z0 = printed_z0(base);
    CHECK(z0.imag() == doctest::Approx(kPi * std::cos(kPi / 4)).epsilon(1e-14));
    CHECK(z0.imag() == doctest::Approx(2.2214).epsilon(1e-4));
    const ReservoirParams p = derive_params(base);
    CHECK(crossover_time(z0, p.z_alpha, p.z1, 0.5) == doctest::Approx(72.0).epsilon(1e-12));
    CHECK(printed_peak_location(base) == doctest::Approx(1.0 + std::sqrt(0.75)).epsilon(1e-14));
}

TEST_CASE("critical coupling zeroes z1") {
    for (double alpha : {0.1, 0.3, 0.5, 0.77}) {
        for (double a : {0.3, 1.0, 2.5}) {
            const double As = critical_coupling(a, alpha);
            CHECK(std::abs(derive_params(ReservoirConfig(As, a, alpha, 1.0)).z1) < 1e-12 * std::max(1.0, a * a));
        }
    }
}

TEST_CASE("tau is at least 1") {
    for (double A : {1e-3, 0.1, 10.0, 1e3})
        for (double alpha : {0.1, 0.5, 0.9}) CHECK(derive_params(ReservoirConfig(A, 1, alpha, 1)).tau >= 1.0);
}

TEST_CASE("spectral density shape") {
    CHECK(spectral_density(0.5, base) == 0.0);
    CHECK(spectral_density(1.0, base) == 0.0);
    CHECK(spectral_density(2.0, base) == doctest::Approx(1.0).epsilon(1e-15));  // 2·1/(1+1)
}

TEST_CASE("f(0) equals the integral of J on 20 random configs") {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> uA(-2, 2), ua(-1, 1), ual(0.05, 0.95);
    for (int i = 0; i < 20; ++i) {
        const ReservoirConfig cfg(std::pow(10.0, uA(rng)), std::pow(10.0, ua(rng)), ual(rng), 1.0);
        const ReservoirParams p = derive_params(cfg);
        const QuadratureValue f0 = correlation_function(0.0, cfg);
        const double closed = p.z1 + cfg.a() * cfg.a();
        CHECK(std::abs(f0.value - closed) <= 1e-10 * std::max(1.0, closed));
        CHECK(f0.error <= 1e-10 * std::max(1.0, closed));
    }
}

TEST_CASE("correlation function against 30-digit reference") {
    const Complex f = correlation_function(0.5, base).value;
    CHECK(std::abs(f - Complex(1.22489771895330637, -1.46984700055389064)) < 1e-13);
    const Complex F1 = correlation_integral(1.0, base).value;
    CHECK(std::abs(F1 - Complex(1.48139454736, -1.32704309832)) < 1e-10);
}

TEST_CASE("|f(tau)| <= f(0)") {
    const double f0 = correlation_function(0.0, base).value.real();
    for (double t : {0.01, 0.1, 0.7, 2.0, 10.0, 50.0, 300.0}) {
        CHECK(std::abs(correlation_function(t, base).value) <= f0 * (1 + 1e-12));
    }
}

TEST_CASE("scaling: f_{A,λa}(τ) = λ^{α−1} f_{A,a}(λτ)") {
    const double lambda = 2.5;
    for (double alpha : {0.3, 0.5, 0.8}) {
        const ReservoirConfig c1(1.3, 0.8, alpha, 1.0), c2(1.3, 0.8 * lambda, alpha, 1.0);
        for (double t : {0.0, 0.2, 1.0, 4.0}) {
            const Complex lhs = correlation_function(t, c2).value;
            const Complex rhs = std::pow(lambda, alpha - 1.0) * correlation_function(lambda * t, c1).value;
            CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
        }
    }
}

TEST_CASE("antiderivatives: F1' = f and F2' = F1") {
    const double h = 1e-4;
    for (double alpha : {0.25, 0.5, 0.75}) {
        const ReservoirConfig cfg(1.0, 1.0, alpha, 1.0);
        for (double t : {0.3, 0.9, 2.5, 7.0}) {
            const Complex dF1 =
                (correlation_integral(t + h, cfg).value - correlation_integral(t - h, cfg).value) / (2 * h);
            const Complex dF2 = (correlation_double_integral(t + h, cfg).value -
                                 correlation_double_integral(t - h, cfg).value) /
                                (2 * h);
            CHECK(std::abs(dF1 - correlation_function(t, cfg).value) < 1e-6);
            CHECK(std::abs(dF2 - correlation_integral(t, cfg).value) < 1e-6);
        }
        CHECK(std::abs(correlation_integral(0.0, cfg).value) == 0.0);
        CHECK(std::abs(correlation_double_integral(0.0, cfg).value) == 0.0);
    }
}

TEST_CASE("negative time is rejected") {
    CHECK_THROWS_AS(correlation_function(-1.0, base), ConfigError);
}

TEST_CASE("spectral density validation") {
    const SummabilityReport r = validate_spectral_density(base);
    CHECK(r.nonnegative);
    CHECK(r.summable);
    CHECK(r.integral == doctest::Approx(r.closed_form).epsilon(1e-8));
    CHECK(r.min_sampled >= 0.0);
}

TEST_CASE("reservoir from text") {
    const ReservoirConfig c = reservoir_from_text("A=2\na=0.5\nalpha=0.25\nomega0=3\nextra=1\n");
    CHECK(c == ReservoirConfig(2, 0.5, 0.25, 3));
    CHECK(reservoir_from_text(R"({"A":1,"a":1,"alpha":0.5,"omega0":1})") == base);
    CHECK_THROWS_AS(reservoir_from_text("A=1\na=1\nalpha=1.5\nomega0=1\n"), ConfigError);
    CHECK_THROWS_AS(reservoir_from_text("A=1\n"), ConfigError);
}
