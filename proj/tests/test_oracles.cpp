// test_oracles.cpp — Volterra marching, Laplace inversion and tail fits

#include "doctest.h"

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "edgedecay/oracles.hpp"
#include "edgedecay/specfun.hpp"

using namespace edgedecay;

namespace {

const ReservoirConfig base_cfg{1.0, 1.0, 0.5, 1.0};
const ReservoirParams base = derive_params(base_cfg);

Complex small_t(const ReservoirParams& p, double t) {
    const double f0 = p.z1 + p.cfg.a() * p.cfg.a();
    const double al = p.cfg.alpha();
    return 1.0 - f0 * t * t / 2.0 - p.z_alpha * std::pow(t, 3 - al) * reciprocal_gamma(4 - al) - p.z0 * t * t * t / 6.0;
}

double j_moment(double y, int power) {
    boost::math::quadrature::exp_sinh<double> q;
    return q.integrate([&](double x) { return 2.0 * std::sqrt(x) / ((1.0 + x * x) * std::pow(x + y, power)); });
}

}  // namespace

TEST_CASE("time grids") {
    const TimeGrid u = TimeGrid::uniform(0.0, 1.0, 5);
    CHECK(u.points.size() == 5);
    CHECK(u.points.back() == doctest::Approx(1.0));
    const TimeGrid l = TimeGrid::logarithmic(0.01, 100.0, 5);
    CHECK(l.points[2] == doctest::Approx(1.0));
    CHECK_THROWS_AS(TimeGrid::logarithmic(0.0, 1.0, 5), ConfigError);
    CHECK_THROWS_AS(TimeGrid::from_points({1.0, 0.5}), ConfigError);
    CHECK_THROWS_AS(TimeGrid::from_points({-1.0}), ConfigError);
    CHECK_THROWS_AS(TimeGrid::from_points({}), ConfigError);
}

TEST_CASE("Laplace: small-t behaviour") {
    const LaplaceInverter lap(base);
    CHECK(std::abs(lap(0.01).value - small_t(base, 0.01)) < 1e-6);
    const double h = 1e-4;
    const Complex d1 = (4.0 * lap(h / 2).value - lap(h).value - 3.0) / h;
    CHECK(std::abs(d1) < 1e-6);
}

TEST_CASE("Laplace: transform identities") {
    const LaplaceInverter lap(base);
    // G̃(u) ~ 1/u for large u, and the removable zero at u = a
    CHECK(std::abs(lap.transform(Complex(1e6, 0)) * 1e6 - 1.0) < 1e-5);
    CHECK(std::abs(lap.denominator(Complex(1.0, 0.0))) < 1e-12);
    CHECK(lap.zero_count() == 3);
}

TEST_CASE("Laplace: bound state against an independent quadrature") {
    const LaplaceInverter lap(base);
    const auto b = lap.bound_pole();
    REQUIRE(b.has_value());
    const double y = b->u.imag();
    CHECK(b->u.real() == 0.0);
    CHECK(y == doctest::Approx(1.1901651383).epsilon(1e-9));
    // y = ∫J/(x+y) dx and R = 1/(1 + ∫J/(x+y)² dx)
    CHECK(y == doctest::Approx(j_moment(y, 1)).epsilon(1e-9));
    CHECK(b->residue.real() == doctest::Approx(1.0 / (1.0 + j_moment(y, 2))).epsilon(1e-9));
    CHECK(std::abs(b->residue.imag()) < 1e-12);
    for (double t : {0.3, 5.0, 400.0}) {
        CHECK(std::abs(lap.bound_state(t) + lap.continuum(t).value - lap(t).value) < 1e-12);
    }
}

TEST_CASE("Laplace: free function and error bound") {
    const GSample s = laplace_invert(base, 2.0);
    CHECK(s.method == Method::laplace);
    CHECK(s.error_bound <= 1e-9);
    CHECK(std::abs(s.value - LaplaceInverter(base)(2.0).value) < 1e-15);
}

TEST_CASE("Volterra: Lorentzian kernel has the damped two-level closed form") {
    const double W = 1.3, g = 0.8;
    VolterraKernel k;
    k.F1 = [=](double t) { return Complex(W * W / 2 * (1 - std::exp(-g * t)) / g, 0); };
    k.F2 = [=](double t) { return Complex(W * W / 2 * (t / g - (1 - std::exp(-g * t)) / (g * g)), 0); };
    const Complex d = std::sqrt(Complex(g * g - 2 * W * W, 0));
    const auto exact = [&](double t) {
        return std::exp(-g * t / 2) * (std::cosh(d * t / 2.0) + g / d * std::sinh(d * t / 2.0));
    };
    VolterraOptions opt;
    opt.kernel = k;
    const TimeGrid grid = TimeGrid::uniform(0.0, 6.0, 25);
    const auto s = volterra_solve(base_cfg, grid, opt);
    for (const auto& x : s) CHECK(std::abs(x.value - exact(x.t)) < 1e-6);
}

TEST_CASE("Volterra: second-order convergence") {
    const VolterraKernel k = reservoir_kernel(base_cfg);
    const auto a = volterra_march(k, 1.0 / 64, 128);
    const auto b = volterra_march(k, 1.0 / 128, 256);
    const auto c = volterra_march(k, 1.0 / 256, 512);
    const double order = std::log2(std::abs(a.back() - b.back()) / std::abs(b.back() - c.back()));
    CHECK(order == doctest::Approx(2.0).epsilon(0.05));
    CHECK(a.size() == 129);
}

TEST_CASE("Volterra agrees with Laplace on [0.1, 2]") {
    const LaplaceInverter lap(base);
    const auto s = volterra_solve(base_cfg, TimeGrid::logarithmic(0.1, 2.0, 12));
    for (const auto& x : s) {
        CHECK(x.method == Method::volterra);
        CHECK(x.error_bound <= 1e-5);
        CHECK(std::abs(x.value - lap(x.t).value) < 1e-8);
    }
}

TEST_CASE("forward transform of the Volterra solution reproduces G~(2)") {
    const double h = 1.0 / 512;
    const int n = 16 * 512;
    const auto G = volterra_march(reservoir_kernel(base_cfg), h, n);
    Complex sum = 0.5 * (G.front() + std::exp(-2.0 * n * h) * G.back());
    for (int i = 1; i < n; ++i) sum += std::exp(-2.0 * i * h) * G[i];
    sum *= h;
    const Complex ref = LaplaceInverter(base).transform(Complex(2.0, 0.0));
    CHECK(std::abs(sum - ref) < 1e-5);
}

TEST_CASE("tail fits") {
    std::vector<std::pair<double, double>> s;
    for (int i = 0; i < 20; ++i) {
        const double t = std::pow(10.0, 2 + i * 0.1);
        s.emplace_back(t, 0.3 * std::pow(t, -1.5));
    }
    const TailFit f = fit_tail_exponent(s);
    CHECK(f.exponent == doctest::Approx(-1.5).epsilon(1e-12));
    CHECK(f.amplitude == doctest::Approx(0.3).epsilon(1e-10));
    CHECK(f.residual < 1e-12);
    CHECK(f.t_lo == s.front().first);
    CHECK(f.t_hi == s.back().first);

    auto noisy = s;
    for (std::size_t i = 0; i < noisy.size(); i += 2) noisy[i].second *= 1.5;
    CHECK_THROWS_AS(fit_tail_exponent(noisy), ConvergenceError);
    CHECK_NOTHROW(fit_power_law(noisy));
    CHECK_THROWS_AS(fit_tail_exponent({s.begin(), s.begin() + 5}), ConfigError);
}

TEST_CASE("continuum tail exponent at alpha = 1/2") {
    const LaplaceInverter lap(base);
    std::vector<std::pair<double, double>> s;
    for (double t : TimeGrid::logarithmic(100 * base.tau, 1000 * base.tau, 30).points)
        s.emplace_back(t, std::abs(lap.continuum(t).value));
    CHECK(fit_tail_exponent(s).exponent == doctest::Approx(-1.5).epsilon(0.02 / 1.5));
}
