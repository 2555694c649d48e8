// volterra.cpp — time grids and product-integration marching of the memory equation

#include <algorithm>
#include <cmath>
#include <string>

#include "edgedecay/oracles.hpp"

namespace edgedecay {

TimeGrid TimeGrid::uniform(double t0, double t1, int count) {
    if (count < 1 || !(t1 >= t0)) throw ConfigError("TimeGrid: need count >= 1 and t1 >= t0");
    TimeGrid g;
    g.spacing = Spacing::uniform;
    for (int i = 0; i < count; ++i) {
        g.points.push_back(count == 1 ? t0 : t0 + (t1 - t0) * i / (count - 1));
    }
    g.validate();
    return g;
}

TimeGrid TimeGrid::logarithmic(double t0, double t1, int count) {
    if (count < 1 || !(t0 > 0.0) || !(t1 >= t0)) {
        throw ConfigError("TimeGrid: logarithmic grid needs 0 < t0 <= t1 and count >= 1");
    }
    TimeGrid g;
    g.spacing = Spacing::logarithmic;
    const double l0 = std::log(t0), l1 = std::log(t1);
    for (int i = 0; i < count; ++i) {
        g.points.push_back(count == 1 ? t0 : std::exp(l0 + (l1 - l0) * i / (count - 1)));
    }
    g.points.back() = t1;
    g.validate();
    return g;
}

TimeGrid TimeGrid::from_points(std::vector<double> points) {
    TimeGrid g;
    g.points = std::move(points);
    g.validate();
    return g;
}

void TimeGrid::validate() const {
    if (points.empty()) throw ConfigError("TimeGrid: no points");
    if (!(points.front() >= 0.0)) throw ConfigError("TimeGrid: first point must be >= 0");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (!(points[i] > points[i - 1])) throw ConfigError("TimeGrid: points must be strictly increasing");
    }
    if (!std::isfinite(points.back())) throw ConfigError("TimeGrid: points must be finite");
}

VolterraKernel reservoir_kernel(const ReservoirConfig& cfg, double tol) {
    return {[cfg, tol](double tau) { return correlation_integral(tau, cfg, tol).value; },
            [cfg, tol](double tau) { return correlation_double_integral(tau, cfg, tol).value; }};
}

std::vector<Complex> volterra_march(const VolterraKernel& kernel, double h, int steps) {
    if (!(h > 0.0) || steps < 0) throw ConfigError("volterra_march: need h > 0 and steps >= 0");
    std::vector<Complex> F1(steps + 2), F2(steps + 2);
    for (int m = 0; m <= steps + 1; ++m) {
        F1[m] = m == 0 ? Complex{} : kernel.F1(m * h);
        F2[m] = m == 0 ? Complex{} : kernel.F2(m * h);
    }
    // Over σ ∈ [mh, (m+1)h] the linear interpolant of G(t_n − σ) integrates to
    // P_m G_{n−1−m} + Q_m G_{n−m}.
    std::vector<Complex> P(steps + 1), Q(steps + 1);
    for (int m = 0; m <= steps; ++m) {
        const Complex dF2 = (F2[m + 1] - F2[m]) / h;
        P[m] = F1[m + 1] - dF2;
        Q[m] = dF2 - F1[m];
    }

    std::vector<Complex> G(steps + 1);
    G[0] = 1.0;
    Complex I_prev = 0.0;  // memory integral at t_0 = 0
    for (int n = 1; n <= steps; ++n) {
        Complex rest = 0.0;  // I_n without the Q_0 G_n term
        for (int m = 0; m < n; ++m) {
            rest += P[m] * G[n - 1 - m];
            if (m > 0) rest += Q[m] * G[n - m];
        }
        G[n] = (G[n - 1] - 0.5 * h * (I_prev + rest)) / (1.0 + 0.5 * h * Q[0]);
        I_prev = rest + Q[0] * G[n];
    }
    return G;
}

namespace {

// Four-point Lagrange interpolation on a uniform table.
Complex interpolate(const std::vector<Complex>& y, double h, double t) {
    const int n = int(y.size()) - 1;
    const double x = t / h;
    int i0 = std::clamp(int(std::floor(x)) - 1, 0, std::max(0, n - 3));
    if (n < 3) i0 = 0;
    const int cnt = std::min(4, n + 1);
    Complex out = 0.0;
    for (int i = 0; i < cnt; ++i) {
        double w = 1.0;
        for (int j = 0; j < cnt; ++j) {
            if (j != i) w *= (x - (i0 + j)) / double(i - j);
        }
        out += w * y[i0 + i];
    }
    return out;
}

}  // namespace

std::vector<GSample> volterra_solve(const ReservoirConfig& cfg, const TimeGrid& grid, const VolterraOptions& opt) {
    grid.validate();
    if (!(opt.h > 0.0)) throw ConfigError("volterra_solve: h must be positive");
    const VolterraKernel kernel = opt.kernel ? *opt.kernel : reservoir_kernel(cfg);
    const double t_end = grid.points.back();
    const int coarse = int(std::ceil(t_end / opt.h - 1e-9)) + 3;
    const auto Gh = volterra_march(kernel, opt.h, coarse);
    const auto Gh2 = volterra_march(kernel, opt.h / 2.0, 2 * coarse);

    std::vector<Complex> extrap(coarse + 1), diff(coarse + 1);
    for (int n = 0; n <= coarse; ++n) {
        extrap[n] = (4.0 * Gh2[2 * n] - Gh[n]) / 3.0;
        diff[n] = (Gh2[2 * n] - Gh[n]) / 3.0;
    }

    std::vector<GSample> out;
    out.reserve(grid.points.size());
    for (double t : grid.points) {
        GSample s{t, 1.0, 0.0, Method::volterra};
        if (t > 0.0) {
            s.value = interpolate(extrap, opt.h, t);
            s.error_bound = std::abs(interpolate(diff, opt.h, t));
        }
        if (s.error_bound > opt.tol) {
            throw NumericalError(Method::volterra, t,
                                 "volterra: Richardson estimate " + std::to_string(s.error_bound) +
                                     " exceeds tolerance; reduce h");
        }
        out.push_back(s);
    }
    return out;
}

}  // namespace edgedecay
