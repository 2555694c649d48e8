// dynamics.hpp — qubit density matrix driven by G(t), and trajectories with
// per-point method routing

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "edgedecay/oracles.hpp"
#include "edgedecay/rational.hpp"
#include "edgedecay/reservoir.hpp"
#include "edgedecay/sample.hpp"

namespace edgedecay {

// Stores ρ11 and ρ10; ρ00 = 1 − ρ11 and ρ01 = conj(ρ10).
class DensityMatrix {
public:
    // Throws ConfigError unless 0 ≤ ρ11 ≤ 1 and ρ11(1−ρ11) ≥ |ρ10|² (within 1e−12).
    DensityMatrix(double rho11, Complex rho10);

    double rho11() const noexcept { return rho11_; }
    double rho00() const noexcept { return 1.0 - rho11_; }
    Complex rho10() const noexcept { return rho10_; }
    Complex rho01() const noexcept { return std::conj(rho10_); }
    double trace() const noexcept { return rho11_ + (1.0 - rho11_); }

    // ρ11 ρ00 − |ρ10|², non-negative for a physical state
    double positivity_margin() const noexcept { return rho11_ * (1.0 - rho11_) - std::norm(rho10_); }

private:
    struct Unchecked {};
    DensityMatrix(Unchecked, double rho11, Complex rho10) : rho11_(rho11), rho10_(rho10) {}
    friend DensityMatrix evolve(const DensityMatrix&, double, const GSample&, double);

    double rho11_;
    Complex rho10_;
};

// ρ11(t) = ρ11(0)|G|²,  ρ10(t) = ρ10(0) e^{−iω₀t} G(t).  The result is not
// re-validated: positivity follows from |G| ≤ 1 and is asserted by callers.
DensityMatrix evolve(const DensityMatrix& rho0, double t, const GSample& g, double omega0);

struct RoutingPolicy {
    double series_tol = 1e-10;       // tolerance handed to the series and to converged_domain
    double series_margin = 1.0;      // use the series for t ≤ margin · t_max
    double root_residual_gate = 1e-10;
    double laplace_tol = 1e-9;
    double volterra_h = 1.0 / 1024.0;
    double volterra_tol = 1e-5;
    int volterra_max_steps = 20000;  // fine-grid steps; longer marches are refused (cost is quadratic)
    int asymptotic_shells = 0;
};

// Evaluates G by a fixed method or by routing: series inside the converged
// window, the rational path when α = p/q and the root set passes the residual
// gate, the Laplace oracle otherwise.  All set-up happens in the constructor, so a
// constructed evaluator is immutable and may be shared between threads.
class GEvaluator {
public:
    explicit GEvaluator(const ReservoirParams& params, RoutingPolicy policy = {});

    // nullopt selects the routing rule.  G(0) = 1 for every method.
    GSample operator()(double t, std::optional<Method> method = std::nullopt) const;

    // Whole grid at once; the Volterra oracle needs this because it marches.
    std::vector<GSample> on_grid(const TimeGrid& grid, std::optional<Method> method = std::nullopt) const;

    Method route(double t) const;
    double series_limit() const noexcept { return series_limit_; }  // t_max of the converged window
    const ReservoirParams& params() const noexcept { return params_; }
    const RoutingPolicy& policy() const noexcept { return policy_; }
    const LaplaceInverter& laplace() const noexcept { return *laplace_; }
    // null when α is not p/q with q ≤ 12 or the root set is unhealthy
    const RationalPath* rational() const noexcept { return rational_.get(); }

private:
    ReservoirParams params_;
    RoutingPolicy policy_;
    std::shared_ptr<const LaplaceInverter> laplace_;
    std::shared_ptr<const RationalPath> rational_;
    double series_limit_ = 0.0;
};

struct TrajectoryPoint {
    double t = 0.0;
    DensityMatrix rho;
    GSample g;
};

// Throws NumericalError carrying the failing method and t.
std::vector<TrajectoryPoint> trajectory(const DensityMatrix& rho0, const TimeGrid& grid, const GEvaluator& evaluator,
                                        const ReservoirConfig& cfg, std::optional<Method> method = std::nullopt);

}  // namespace edgedecay
