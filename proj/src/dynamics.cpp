// dynamics.cpp — density-matrix evolution and method routing

#include "edgedecay/dynamics.hpp"

#include <cmath>
#include <string>

#include "edgedecay/asymptotics.hpp"
#include "edgedecay/series.hpp"

namespace edgedecay {

DensityMatrix::DensityMatrix(double rho11, Complex rho10) : rho11_(rho11), rho10_(rho10) {
    if (!(rho11 >= 0.0 && rho11 <= 1.0)) throw ConfigError("DensityMatrix: rho11 must lie in [0, 1]");
    if (!std::isfinite(std::abs(rho10))) throw ConfigError("DensityMatrix: rho10 must be finite");
    if (positivity_margin() < -1e-12) {
        throw ConfigError("DensityMatrix: |rho10|^2 exceeds rho11 (1 - rho11); state is not positive");
    }
}

DensityMatrix evolve(const DensityMatrix& rho0, double t, const GSample& g, double omega0) {
    return {DensityMatrix::Unchecked{}, rho0.rho11() * std::norm(g.value),
            rho0.rho10() * std::polar(1.0, -omega0 * t) * g.value};
}

GEvaluator::GEvaluator(const ReservoirParams& params, RoutingPolicy policy) : params_(params), policy_(policy) {
    LaplaceOptions lopt;
    lopt.tol = policy_.laplace_tol;
    laplace_ = std::make_shared<const LaplaceInverter>(params_, lopt);
    series_limit_ = converged_domain(params_, policy_.series_tol).t_max;
    if (auto ord = RationalOrder::from_alpha(params_.cfg.alpha(), 12)) {
        try {
            auto path = std::make_shared<const RationalPath>(params_, *ord);
            if (path->roots().max_residual() <= policy_.root_residual_gate && !path->table().ill_conditioned) {
                rational_ = std::move(path);
            }
        } catch (const ConvergenceError&) {
            // unhealthy root set: routing falls back to the Laplace oracle
        }
    }
}

Method GEvaluator::route(double t) const {
    if (t <= policy_.series_margin * series_limit()) return Method::series;
    if (rational()) return Method::rational;
    return Method::laplace;
}

GSample GEvaluator::operator()(double t, std::optional<Method> method) const {
    const Method m = method ? *method : route(t);
    if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("evaluate: t must be finite and >= 0");
    if (t == 0.0) return {0.0, Complex(1.0, 0.0), 0.0, m};
    switch (m) {
        case Method::series: {
            SeriesOptions opt;
            opt.tol = policy_.series_tol;
            return g_series(t, params_, opt);
        }
        case Method::star_series: {
            SeriesOptions opt;
            opt.tol = policy_.series_tol;
            return g_star_series(t, params_, opt);
        }
        case Method::rational: {
            const RationalPath* path = rational();
            if (!path) {
                throw NumericalError(Method::rational, t, "rational path unavailable: alpha is not p/q with q <= 12 "
                                                          "or its root set failed the residual gate");
            }
            return (*path)(t);
        }
        case Method::asymptotic:
            return g_asymptotic(t, params_, policy_.asymptotic_shells);
        case Method::laplace:
            return (*laplace_)(t);
        case Method::volterra:
            return on_grid(TimeGrid::from_points({t}), Method::volterra).front();
    }
    throw ConfigError("evaluate: unknown method");
}

std::vector<GSample> GEvaluator::on_grid(const TimeGrid& grid, std::optional<Method> method) const {
    grid.validate();
    if (method && *method == Method::volterra) {
        const double t_end = grid.points.back();
        if (t_end / policy_.volterra_h * 2.0 > policy_.volterra_max_steps) {
            throw NumericalError(Method::volterra, t_end,
                                 "volterra: grid end needs more than " + std::to_string(policy_.volterra_max_steps) +
                                     " marching steps");
        }
        VolterraOptions opt;
        opt.h = policy_.volterra_h;
        opt.tol = policy_.volterra_tol;
        return volterra_solve(params_.cfg, grid, opt);
    }
    std::vector<GSample> out;
    out.reserve(grid.points.size());
    for (double t : grid.points) out.push_back((*this)(t, method));
    return out;
}

std::vector<TrajectoryPoint> trajectory(const DensityMatrix& rho0, const TimeGrid& grid, const GEvaluator& evaluator,
                                        const ReservoirConfig& cfg, std::optional<Method> method) {
    const auto samples = evaluator.on_grid(grid, method);
    std::vector<TrajectoryPoint> out;
    out.reserve(samples.size());
    for (const GSample& g : samples) out.push_back({g.t, evolve(rho0, g.t, g, cfg.omega0()), g});
    return out;
}

}  // namespace edgedecay
