// series.cpp — shell-ordered summation of the Mittag-Leffler double series

#include "edgedecay/series.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "edgedecay/oracles.hpp"
#include "edgedecay/specfun.hpp"

namespace edgedecay {
namespace {

using LD = long double;
using CLD = std::complex<long double>;

constexpr LD kPiL = 3.141592653589793238462643383279502884L;

// Constants rescaled to a = 1:  G(t; A, a) = G(a t; A a^{α−3}, 1).
struct Scaled {
    LD abs_z0, arg_z0, abs_za, arg_za;
    LD z1;
    LD alpha;
    LD s;  // a t
};

Scaled rescale(const ReservoirParams& p, double t) {
    const double a = p.cfg.a(), al = p.cfg.alpha();
    Scaled sc{};
    sc.abs_z0 = std::abs(p.z0) / std::pow(a, 3.0);
    sc.arg_z0 = std::arg(p.z0);
    sc.abs_za = std::abs(p.z_alpha) / std::pow(a, 3.0 - al);
    sc.arg_za = std::arg(p.z_alpha);
    sc.z1 = p.z1 / (a * a);
    sc.alpha = al;
    sc.s = LD(a) * LD(t);
    return sc;
}

GSample sum_shells(double t, const ReservoirParams& params, const SeriesOptions& opt, bool star) {
    const Method method = star ? Method::star_series : Method::series;
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("series: t must be finite and >= 0");
    if (!(opt.tol > 0.0)) throw ConfigError("series: tol must be positive");
    GSample out{t, Complex(1.0, 0.0), 0.0, method};
    if (t == 0.0) return out;

    const Scaled sc = rescale(params, t);
    const LD x = star ? 0.0L : -sc.z1 * sc.s * sc.s;
    if (std::abs(x) > LD(opt.max_ml_argument)) {
        throw NumericalError(method, t,
                             "series: Mittag-Leffler argument |z1| (a t)^2 = " + std::to_string(double(std::abs(x))) +
                                 " exceeds " + std::to_string(opt.max_ml_argument));
    }
    const LD log_s = std::log(sc.s);
    const LD log_z0 = std::log(sc.abs_z0);
    const LD log_za = std::log(sc.abs_za);
    const LD eps = std::numeric_limits<LD>::epsilon();

    MLOptions ml;
    ml.tol = 1e-18;
    ml.max_abs_z = opt.max_ml_argument;
    ml.check_rounding = false;

    using boost::math::lgamma;
    CLD sum = 0.0L;
    LD magnitude_scale = 0.0L;  // Σ over every product that entered the sum
    LD truncation = 0.0L;
    int quiet = 0;
    LD recent[3] = {0.0L, 0.0L, 0.0L};

    try {
        for (int n = 0; n < opt.max_shells; ++n) {
            CLD shell = 0.0L;
            LD shell_abs = 0.0L;
            const LD lfact_n = lgamma(LD(n) + 1.0L);
            for (int k = 0; k <= n; ++k) {
                const LD beta = 3.0L * n - sc.alpha * k + 1.0L;
                const LD log_mag = lfact_n - lgamma(LD(k) + 1.0L) - lgamma(LD(n - k) + 1.0L) + k * log_za +
                                   (n - k) * log_z0 + (beta - 1.0L) * log_s - lgamma(beta);
                const LD phase = k * sc.arg_za + (n - k) * sc.arg_z0 + n * kPiL;
                const CLD coef = std::polar(std::exp(log_mag), phase);
                const LD shift = sc.s * sc.s / (beta * (beta + 1.0L));

                CLD bracket;
                LD bracket_abs, bracket_err;
                if (star) {
                    bracket = 1.0L - shift;
                    bracket_abs = 1.0L + shift;
                    bracket_err = 0.0L;
                } else {
                    const MLParams g{2.0, double(beta), double(n + 1)};
                    const MLParams g2{2.0, double(beta + 2.0L), double(n + 1)};
                    const auto e0 = mittag_leffler_scaled(g, CLD(x, 0.0L), ml);
                    const auto e2 = mittag_leffler_scaled(g2, CLD(x, 0.0L), ml);
                    bracket = e0.value - shift * e2.value;
                    bracket_abs = e0.abs_sum + shift * e2.abs_sum;
                    bracket_err = e0.error + shift * e2.error;
                }
                const CLD term = coef * bracket;
                const LD cabs = std::abs(coef);
                shell += term;
                shell_abs += std::abs(term);
                magnitude_scale += cabs * bracket_abs;
                truncation += cabs * bracket_err;
            }
            sum += shell;
            recent[n % 3] = shell_abs;
            quiet = shell_abs < LD(opt.tol) / 10.0L ? quiet + 1 : 0;
            if (quiet >= 3) {
                const LD tail = recent[0] + recent[1] + recent[2];
                const LD rounding = 8.0L * eps * magnitude_scale;
                if (rounding > LD(opt.tol)) {
                    throw NumericalError(method, t,
                                         "series: loss of significance, rounding estimate " +
                                             std::to_string(double(rounding)) + " exceeds tol");
                }
                out.value = Complex(double(sum.real()), double(sum.imag()));
                out.error_bound = double(tail + rounding + truncation) +
                                  std::numeric_limits<double>::epsilon() * std::abs(out.value);
                if (out.error_bound > opt.tol) {
                    throw NumericalError(method, t,
                                         "series: error bound " + std::to_string(out.error_bound) + " exceeds tol");
                }
                return out;
            }
        }
    } catch (const ConvergenceError& e) {
        throw NumericalError(method, t, std::string("series: ") + e.what());
    }
    throw NumericalError(method, t, "series: shell budget exhausted");
}

}  // namespace

GSample g_series(double t, const ReservoirParams& params, const SeriesOptions& opt) {
    return sum_shells(t, params, opt, false);
}

GSample g_star_series(double t, const ReservoirParams& params, const SeriesOptions& opt) {
    const double a2 = params.cfg.a() * params.cfg.a();
    if (std::abs(params.z1) > 1e-12 * std::max(1.0, a2)) {
        throw ConfigError("g_star_series: requires z1 = 0 (A = A*), got z1 = " + std::to_string(params.z1));
    }
    return sum_shells(t, params, opt, true);
}

ConvergedDomain converged_domain(const ReservoirParams& params, double tol) {
    ConvergedDomain dom;
    const double a = params.cfg.a();
    LaplaceInverter oracle(params);
    SeriesOptions opt;
    opt.tol = tol;
    dom.probes_total = 41;
    for (int i = 0; i < dom.probes_total; ++i) {
        const double t = std::pow(10.0, -2.0 + 0.1 * i) / a;
        try {
            const GSample s = g_series(t, params, opt);
            const GSample ref = oracle(t);
            if (std::abs(s.value - ref.value) > 10.0 * tol) break;
        } catch (const NumericalError&) {
            break;
        }
        dom.t_max = t;
        ++dom.probes_passed;
    }
    return dom;
}

}  // namespace edgedecay
