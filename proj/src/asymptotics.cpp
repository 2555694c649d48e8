// asymptotics.cpp — inverse-power-law coefficients from the small-u expansion

#include "edgedecay/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "edgedecay/specfun.hpp"

namespace edgedecay {
namespace {

double log_factorial(int n) { return log_gamma(n + 1.0); }

}  // namespace

Complex d_alpha(const ReservoirParams& params) {
    const double al = params.cfg.alpha(), a = params.cfg.a(), A = params.cfg.A();
    const double h = kPi * al / 2.0;
    const double s = std::sin(h);
    const double mag = 2.0 * al * std::pow(a, 2.0 * (1.0 - al)) * s * s /
                       (std::sin(kPi * al) * kPi * A) * reciprocal_gamma(1.0 - al);
    return Complex(0.0, mag) * std::polar(1.0, -h);
}

Complex printed_d_alpha(const ReservoirConfig& cfg) {
    const double al = cfg.alpha(), a = cfg.a(), A = cfg.A();
    const double h = kPi * al / 2.0;
    const double c = std::cos(h);
    const double mag = 2.0 * al * std::pow(a, 2.0 * (1.0 - al)) / (c * c) /
                       (std::sin(kPi * al) * kPi * A) * reciprocal_gamma(1.0 - al);
    return Complex(0.0, mag) * std::polar(1.0, -h);
}

TripleSumTerm triple_sum_term(const ReservoirParams& params, int n, int k, int j) {
    if (n < 0 || k < 0 || j < 0 || k > n || j > k) {
        throw ConfigError("triple_sum_term: need 0 <= j <= k <= n");
    }
    const double al = params.cfg.alpha(), a = params.cfg.a();
    const double s = al * (n - k) + k + 2.0 * j;
    const double mult = std::exp(log_factorial(n) - log_factorial(n - k) - log_factorial(k - j) - log_factorial(j));
    Complex c = (n % 2 == 0 ? -1.0 : 1.0) * mult * std::pow(params.z0, -(n + 1)) *
                std::pow(params.z_alpha, n - k) * std::pow(Complex(params.z1), k - j);
    // 1/Γ(−s) vanishes at integer s ≥ 0
    c *= reciprocal_gamma(-s);
    TripleSumTerm out;
    out.lead_coeff = c * (a * a);
    out.lead_power = -1.0 - s;
    out.shift_coeff = -c * ((s + 1.0) * (s + 2.0));
    out.shift_power = -3.0 - s;
    return out;
}

AsymptoticExpansion expansion(const ReservoirParams& params, int n_shells) {
    if (n_shells < 0) throw ConfigError("expansion: n_shells must be >= 0");
    const double al = params.cfg.alpha();
    AsymptoticExpansion ex;
    ex.leading_coeff = -d_alpha(params);
    ex.leading_power = -1.0 - al;
    if (n_shells == 0) return ex;

    // Every term has power −1−s or −3−s with s ≥ αn, so all powers down to
    // −1−smax are covered once n ≤ smax/α.
    for (double smax = 2.0 + al;; smax *= 1.5) {
        std::map<double, Complex, std::greater<>> groups;
        auto add = [&](double power, Complex c) {
            if (power < -1.0 - smax || c == Complex(0.0)) return;
            auto it = groups.lower_bound(power + 1e-12);
            if (it != groups.end() && std::abs(it->first - power) < 1e-12) {
                it->second += c;
            } else {
                groups.emplace(power, c);
            }
        };
        const int nmax = int(std::ceil(smax / al)) + 1;
        for (int n = 1; n <= nmax; ++n) {
            for (int k = 0; k <= n; ++k) {
                for (int j = 0; j <= k; ++j) {
                    if (al * (n - k) + k + 2.0 * j > smax) continue;
                    const auto term = triple_sum_term(params, n, k, j);
                    add(term.lead_power, term.lead_coeff);
                    add(term.shift_power, term.shift_coeff);
                }
            }
        }
        // The leading power collects only −D_α; it is reported separately.
        if (auto it = groups.lower_bound(ex.leading_power + 1e-12);
            it != groups.end() && std::abs(it->first - ex.leading_power) < 1e-12) {
            groups.erase(it);
        }
        if (int(groups.size()) >= n_shells) {
            for (const auto& [power, c] : groups) {
                if (int(ex.correction_terms.size()) == n_shells) break;
                ex.correction_terms.emplace_back(c, power);
            }
            return ex;
        }
    }
}

GSample g_asymptotic(double t, const ReservoirParams& params, int n_shells) {
    if (!(t > 0.0)) throw ConfigError("g_asymptotic: t must be > 0");
    const auto ex = expansion(params, n_shells);
    GSample s{t, ex.leading_coeff * std::pow(t, ex.leading_power), 0.0, Method::asymptotic};
    for (const auto& [c, p] : ex.correction_terms) s.value += c * std::pow(t, p);
    return s;
}

double timescale_tau(const ReservoirParams& params) {
    return crossover_time(params.z0, params.z_alpha, params.z1, params.cfg.alpha());
}

std::pair<double, double> tail_exponent_prediction(const ReservoirConfig& cfg) {
    return {-2.0 - 2.0 * cfg.alpha(), -1.0 - cfg.alpha()};
}

}  // namespace edgedecay
