// test_rational.cpp — polynomial in z = u^{1/q}, its roots, residues and the time-domain sum

#include "doctest.h"

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "edgedecay/oracles.hpp"
#include "edgedecay/rational.hpp"

using namespace edgedecay;

namespace {

const ReservoirParams base = derive_params({1.0, 1.0, 0.5, 1.0});

std::vector<Complex> expand(const std::vector<Complex>& roots) {
    std::vector<Complex> c{1.0};
    for (Complex r : roots) {
        std::vector<Complex> next(c.size() + 1, 0.0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k + 1] += c[k];
            next[k] -= r * c[k];
        }
        c = next;
    }
    return c;
}

bool has_root(const RootSet& rs, Complex z, int m, double tol) {
    for (const Root& r : rs.roots)
        if (std::abs(r.zeta - z) < tol && r.multiplicity == m) return true;
    return false;
}

}  // namespace

TEST_CASE("rational orders") {
    CHECK_THROWS_AS(RationalOrder(2, 4), ConfigError);
    CHECK_THROWS_AS(RationalOrder(3, 2), ConfigError);
    CHECK_THROWS_AS(RationalOrder(0, 2), ConfigError);
    const auto half = RationalOrder::from_alpha(0.5);
    REQUIRE(half.has_value());
    CHECK(half->p == 1);
    CHECK(half->q == 2);
    CHECK(RationalOrder::from_alpha(0.75)->q == 4);
    CHECK_FALSE(RationalOrder::from_alpha(0.37).has_value());
    CHECK_FALSE(RationalOrder::from_alpha(std::sqrt(0.5)).has_value());
}

TEST_CASE("Q(z) is the transform denominator at u = z^q") {
    const RationalOrder ord(1, 2);
    const auto c = build_q_polynomial(ord, base);
    REQUIRE(c.size() == 7);
    CHECK(c.back() == Complex(1.0, 0.0));
    const LaplaceInverter lap(base);
    for (const Complex z : {Complex(0.7, 0.2), Complex(1.5, -0.9), Complex(0.1, 0.05)}) {
        const Complex u = std::pow(z, 2);
        CHECK(std::abs(eval_polynomial(c, z) - lap.denominator(u)) < 1e-12 * polynomial_scale(c, z));
    }
    CHECK_THROWS_AS(build_q_polynomial(RationalOrder(1, 3), base), ConfigError);
}

TEST_CASE("root set for alpha = 1/2") {
    const RationalOrder ord(1, 2);
    const auto c = build_q_polynomial(ord, base);
    const RootSet rs = find_roots(c);
    CHECK(rs.degree == 6);
    CHECK(rs.total_multiplicity() == 6);
    CHECK(rs.max_residual() <= 1e-10);
    CHECK(has_root(rs, Complex(1.0, 0.0), 1, 1e-10));
    CHECK(has_root(rs, Complex(0.0, 1.0), 1, 1e-10));
    CHECK(has_root(rs, Complex(0.77142, 0.77142), 1, 1e-5));
    CHECK(has_root(rs, Complex(-1.2117, -1.2117), 1, 1e-4));
    CHECK(has_root(rs, Complex(0.77369, -1.33341), 1, 1e-5));
    CHECK(has_root(rs, Complex(-1.33341, 0.77369), 1, 1e-5));

    // Vieta: Σζ = −c₅, Πζ = c₀ (degree 6)
    Complex sum = 0.0, prod = 1.0;
    for (const Root& r : rs.roots) {
        sum += double(r.multiplicity) * r.zeta;
        prod *= std::pow(r.zeta, r.multiplicity);
    }
    CHECK(std::abs(sum + c[5]) < 1e-10);
    CHECK(std::abs(prod - c[0]) < 1e-10 * std::abs(c[0]));
}

TEST_CASE("multiple roots are recognised") {
    const RootSet two = find_roots(expand({1.0, 1.0, 2.0, Complex(0, -1)}));
    CHECK(two.total_multiplicity() == 4);
    CHECK(two.roots.size() == 3);
    CHECK(has_root(two, 1.0, 2, 1e-9));
    CHECK(has_root(two, 2.0, 1, 1e-9));

    const Complex w(0.5, 0.25);
    const RootSet three = find_roots(expand({w, w, w, -1.0, Complex(0, 2)}));
    CHECK(three.total_multiplicity() == 5);
    CHECK(has_root(three, w, 3, 1e-8));
}

TEST_CASE("double root: residue table against the symbolic expansion") {
    const ReservoirConfig cfg(1.0, 1.0, 0.5, 1.0);
    const RationalOrder ord(1, 2);
    // (z⁴ − 1)/((z − 2)²(z + 1)(z − 1)(z − i)(z + 3)); three roots cancel
    RootSet rs2;
    rs2.degree = 6;
    rs2.roots = {{Complex(2, 0), 2, 0.0}, {Complex(-1, 0), 1, 0.0}, {Complex(1, 0), 1, 0.0},
                 {Complex(0, 1), 1, 0.0}, {Complex(-3, 0), 1, 0.0}};
    const ResidueTable t = residue_coefficients(rs2, ord, cfg);
    REQUIRE(t.b.size() == 5);
    CHECK(t.removable[1]);
    CHECK(t.removable[2]);
    CHECK(t.removable[3]);
    CHECK_FALSE(t.removable[0]);
    CHECK_FALSE(t.removable[4]);
    // remaining function (z + i)/((z − 2)²(z + 3)):  H(z) = (z + i)/(z + 3)
    const Complex H2 = Complex(2, 1) / 5.0;
    const Complex dH2 = (5.0 - Complex(2, 1)) / 25.0;
    CHECK(std::abs(t.b[0][0] - H2) < 1e-13);   // k = 1: H/(1!·0!)
    CHECK(std::abs(t.b[0][1] - dH2) < 1e-13);  // k = 2: H'/(0!·1!)
    CHECK(std::abs(t.b[4][0] - Complex(-3, 1) / 25.0) < 1e-13);
}

TEST_CASE("partial-fraction reconstruction at 20 probe points") {
    for (auto [p, q] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 4}}) {
        const RationalOrder ord(p, q);
        const ReservoirParams params = derive_params({1.0, 1.0, ord.value(), 1.0});
        const auto c = build_q_polynomial(ord, params);
        const RootSet rs = find_roots(c);
        const ResidueTable table = residue_coefficients(rs, ord, params.cfg);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Complex z = std::polar(0.4 + 0.2 * i, 0.37 + 0.61 * i);
            const Complex direct = (std::pow(z, 2 * q) - 1.0) / eval_polynomial(c, z);
            worst = std::max(worst, std::abs(partial_fraction_value(rs, table, z) - direct) /
                                        std::max(1.0, std::abs(direct)));
        }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("eta marginal matches quadrature where the literal integral converges") {
    const RationalOrder ord(1, 2);
    const RationalPath path(base, ord);
    boost::math::quadrature::exp_sinh<double> qd;
    int tested = 0;
    for (std::size_t l = 0; l < path.roots().roots.size(); ++l) {
        if (path.table().removable[l] || path.roots().roots[l].zeta.real() >= 0.0) continue;
        for (double xi : {0.3, 1.0, 4.0}) {
            const auto part = [&](bool im) {
                return qd.integrate([&](double eta) {
                    const Complex v = phi_integrand(eta, xi, int(l), ord, path.roots(), path.table());
                    return im ? v.imag() : v.real();
                });
            };
            const Complex quad(part(false), part(true));
            const Complex closed = eta_marginal(xi, int(l), ord, path.roots(), path.table());
            CHECK(std::abs(quad - closed) < 1e-9 * std::max(1.0, std::abs(closed)));
            ++tested;
        }
    }
    CHECK(tested >= 3);
}

TEST_CASE("rational path matches the Laplace oracle on [0.5, 50]") {
    const RationalPath path(base, RationalOrder(1, 2));
    const LaplaceInverter lap(base);
    CHECK(path.principal_roots().size() == 2);
    for (double t : TimeGrid::logarithmic(0.5, 50.0, 20).points) {
        const GSample s = path(t);
        CHECK(s.method == Method::rational);
        CHECK(std::abs(s.value - lap(t).value) < 1e-6);
        CHECK(std::abs(path.pole_part(t) + path.cut_part(t).value - s.value) < 1e-12);
    }
}

TEST_CASE("other rational orders") {
    for (auto [p, q] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 4}, std::pair{1, 4}}) {
        const ReservoirParams params = derive_params({1.0, 1.0, double(p) / q, 1.0});
        const RationalPath path(params, RationalOrder(p, q));
        CHECK(path.roots().total_multiplicity() == 3 * q);
        const LaplaceInverter lap(params);
        for (double t : {0.7, 6.0, 40.0}) CHECK(std::abs(path(t).value - lap(t).value) < 1e-8);
    }
}

TEST_CASE("literal double integral diverges with a right-half-plane root") {
    const RationalPath path(base, RationalOrder(1, 2));
    try {
        (void)g_rational_literal(1.0, path.order(), path.roots(), path.table());
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(e.method() == Method::rational);
    }
}
