// reservoir.cpp — spectral density, derived constants and the correlation function

#include "edgedecay/reservoir.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edgedecay/config_text.hpp"
#include "quadrature.hpp"

namespace edgedecay {
namespace {

constexpr Complex kI{0.0, 1.0};

// Rotation of the frequency ray: x = r e^{−iπ/4} turns e^{−ixτ} into a decaying exponential.
const Complex kRay = std::polar(1.0, -kPi / 4.0);

Complex density_on_ray(double r, const ReservoirConfig& cfg) {
    const Complex x = r * kRay;
    const Complex xa = std::polar(std::pow(r, cfg.alpha()), -kPi * cfg.alpha() / 4.0);
    return 2.0 * cfg.A() * xa / (cfg.a() * cfg.a() + x * x);
}

// (1 − e^{−w})/w and (e^{−w} − 1 + w)/w², series near the origin.
Complex phi1(Complex w) {
    if (std::abs(w) < 0.5) {
        Complex sum = 0.0, term = 1.0;
        for (int k = 0; k < 24; ++k) {
            sum += term;
            term *= -w / double(k + 2);
        }
        return sum;
    }
    return (1.0 - std::exp(-w)) / w;
}

Complex phi2(Complex w) {
    if (std::abs(w) < 0.5) {
        Complex sum = 0.0, term = 0.5;
        for (int k = 0; k < 24; ++k) {
            sum += term;
            term *= -w / double(k + 3);
        }
        return sum;
    }
    return (std::exp(-w) - 1.0 + w) / (w * w);
}

// ∫_X^∞ 2A x^α/(a²+x²) dx for X ≥ 2a, from the expansion in (a/x)².
double density_tail(double X, const ReservoirConfig& cfg) {
    const double a2 = cfg.a() * cfg.a();
    double sum = 0.0;
    double pw = std::pow(X, cfg.alpha() - 1.0);
    double sign = 1.0;
    for (int k = 0; k < 200; ++k) {
        const double term = sign * pw / (1.0 + 2.0 * k - cfg.alpha());
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        pw *= a2 / (X * X);
        sign = -sign;
    }
    return 2.0 * cfg.A() * sum;
}

double total_weight_closed_form(const ReservoirConfig& cfg) {
    return kPi * cfg.A() * std::pow(cfg.a(), cfg.alpha() - 1.0) / std::cos(kPi * cfg.alpha() / 2.0);
}

// ∫₀^∞ J by quadrature on [0, 10a] plus the analytic tail.
detail::Integral<double> total_weight_quadrature(const ReservoirConfig& cfg, double tol) {
    const double X = 10.0 * cfg.a();
    auto body = detail::integrate_interval(
        [&](double x) { return spectral_density(cfg.omega0() + x, cfg); }, 0.0, X, tol);
    body.value += density_tail(X, cfg);
    return body;
}

template <class Kernel>
QuadratureValue ray_integral(const ReservoirConfig& cfg, double tol, const char* what, Kernel&& k) {
    const double scale = std::max(1.0, total_weight_closed_form(cfg));
    const double rel = std::clamp(0.1 * tol / scale, 1e-15, 1e-6);
    auto res = detail::integrate_half_line(
        [&](double r) { return density_on_ray(r, cfg) * k(r * kRay) * kRay; }, rel);
    if (!std::isfinite(res.value.real()) || !std::isfinite(res.value.imag()) || res.error > tol) {
        throw ConvergenceError(std::string(what) + ": quadrature error " + std::to_string(res.error) +
                               " exceeds tolerance " + std::to_string(tol));
    }
    return {res.value, res.error};
}

}  // namespace

ReservoirConfig::ReservoirConfig(double A, double a, double alpha, double omega0)
    : A_(A), a_(a), alpha_(alpha), omega0_(omega0) {
    if (!(A > 0.0) || !std::isfinite(A)) throw ConfigError("reservoir: A must be > 0, got " + std::to_string(A));
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("reservoir: a must be > 0, got " + std::to_string(a));
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("reservoir: alpha must lie strictly inside (0, 1), got " + std::to_string(alpha));
    }
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw ConfigError("reservoir: omega0 must be > 0, got " + std::to_string(omega0));
    }
}

double critical_coupling(double a, double alpha) {
    return std::pow(a, 3.0 - alpha) * std::cos(kPi * alpha / 2.0) / kPi;
}

double crossover_time(Complex z0, Complex z_alpha, double z1, double alpha) {
    const double r0 = std::abs(z0);
    double t = 1.0;
    t = std::max(t, std::cbrt(3.0 / r0));
    t = std::max(t, std::pow(3.0 * std::abs(z_alpha) / r0, 1.0 / alpha));
    t = std::max(t, 3.0 * std::abs(z1) / r0);
    return t;
}

ReservoirParams derive_params(const ReservoirConfig& cfg) {
    const double A = cfg.A(), a = cfg.a(), al = cfg.alpha();
    const double h = kPi * al / 2.0;
    ReservoirParams p{cfg, {}, {}};
    p.z0 = kI * (kPi * A * std::pow(a, al) / std::sin(h));
    p.z_alpha = -2.0 * kI * kPi * A * std::polar(1.0, -h) / std::sin(kPi * al);
    p.z1 = kPi * A * std::pow(a, al - 1.0) / std::cos(h) - a * a;
    p.A_star = critical_coupling(a, al);
    p.tau = crossover_time(p.z0, p.z_alpha, p.z1, al);
    p.Omega_alpha = cfg.omega0() + a * std::sqrt(al / (2.0 - al));
    p.M_alpha = A * std::pow(al, al / 2.0) * std::pow(a, al - 2.0) * std::pow(2.0 - al, 1.0 - al / 2.0);
    return p;
}

Complex printed_z0(const ReservoirConfig& cfg) {
    return kI * (kPi * cfg.A() * std::pow(cfg.a(), cfg.alpha()) * std::cos(kPi * cfg.alpha() / 2.0));
}

double printed_peak_location(const ReservoirConfig& cfg) {
    return cfg.omega0() + cfg.a() * std::sqrt(cfg.alpha() * (2.0 - cfg.alpha()));
}

double spectral_density(double omega, const ReservoirConfig& cfg) {
    const double x = omega - cfg.omega0();
    if (!(x > 0.0)) return 0.0;
    if (std::isinf(x)) return 0.0;
    return 2.0 * cfg.A() * std::pow(x, cfg.alpha()) / (cfg.a() * cfg.a() + x * x);
}

QuadratureValue correlation_function(double tau, const ReservoirConfig& cfg, double tol) {
    if (!(tau >= 0.0)) throw ConfigError("correlation_function: tau must be >= 0");
    if (tau == 0.0) {
        auto w = total_weight_quadrature(cfg, 1e-14);
        if (w.error > tol) throw ConvergenceError("correlation_function: f(0) quadrature missed tolerance");
        return {Complex(w.value, 0.0), w.error};
    }
    return ray_integral(cfg, tol, "correlation_function",
                        [tau](Complex x) { return std::exp(-kI * x * tau); });
}

QuadratureValue correlation_integral(double tau, const ReservoirConfig& cfg, double tol) {
    if (!(tau >= 0.0)) throw ConfigError("correlation_integral: tau must be >= 0");
    if (tau == 0.0) return {};
    return ray_integral(cfg, tol, "correlation_integral",
                        [tau](Complex x) { return tau * phi1(kI * tau * x); });
}

QuadratureValue correlation_double_integral(double tau, const ReservoirConfig& cfg, double tol) {
    if (!(tau >= 0.0)) throw ConfigError("correlation_double_integral: tau must be >= 0");
    if (tau == 0.0) return {};
    return ray_integral(cfg, tol, "correlation_double_integral",
                        [tau](Complex x) { return tau * tau * phi2(kI * tau * x); });
}

SummabilityReport validate_spectral_density(const ReservoirConfig& cfg) {
    SummabilityReport rep;
    rep.closed_form = total_weight_closed_form(cfg);
    const auto w = total_weight_quadrature(cfg, 1e-14);
    rep.integral = w.value;
    rep.quadrature_error = w.error;

    // log-spaced probe grid from 1e−6 a to 1e6 a above the edge, plus the edge itself
    double lowest = spectral_density(cfg.omega0(), cfg);
    for (int i = 0; i <= 1200; ++i) {
        const double x = cfg.a() * std::pow(10.0, -6.0 + i * 0.01);
        lowest = std::min(lowest, spectral_density(cfg.omega0() + x, cfg));
    }
    rep.min_sampled = lowest;
    rep.nonnegative = lowest >= 0.0;
    rep.summable = std::isfinite(rep.integral) &&
                   std::abs(rep.integral - rep.closed_form) <= 1e-8 * std::max(1.0, rep.closed_form);
    return rep;
}

ReservoirConfig reservoir_from_text(const std::string& text) {
    const auto kv = ConfigText::parse(text);
    return {kv.number("A"), kv.number("a"), kv.number("alpha"), kv.number("omega0")};
}

}  // namespace edgedecay
