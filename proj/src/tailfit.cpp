// tailfit.cpp — least-squares power laws in log–log coordinates

#include <cmath>
#include <string>

#include "edgedecay/oracles.hpp"

namespace edgedecay {

TailFit fit_power_law(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 2) throw ConfigError("fit: need at least two samples");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = double(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto [t, y] = samples[i];
        if (!(t > 0.0) || !(y > 0.0)) throw ConfigError("fit: times and magnitudes must be positive");
        if (i > 0 && !(t > samples[i - 1].first)) throw ConfigError("fit: times must be strictly increasing");
        const double lx = std::log(t), ly = std::log(y);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icept = (sy - slope * sx) / n;
    TailFit fit;
    fit.exponent = slope;
    fit.amplitude = std::exp(icept);
    fit.t_lo = samples.front().first;
    fit.t_hi = samples.back().first;
    for (const auto& [t, y] : samples) {
        fit.residual = std::max(fit.residual, std::abs(std::log(y) - icept - slope * std::log(t)));
    }
    return fit;
}

TailFit fit_tail_exponent(const std::vector<std::pair<double, double>>& samples) {
    if (samples.size() < 8) throw ConfigError("fit_tail_exponent: need at least 8 samples");
    TailFit fit = fit_power_law(samples);
    if (fit.residual > kTailResidualLimit) {
        throw ConvergenceError("fit_tail_exponent: window is not a power law (log residual " +
                               std::to_string(fit.residual) + ")");
    }
    return fit;
}

}  // namespace edgedecay
