// oracles.hpp — independent references for G(t): direct Volterra marching,
// numerical Laplace inversion and power-law tail fits

#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "edgedecay/reservoir.hpp"
#include "edgedecay/sample.hpp"

namespace edgedecay {

struct TimeGrid {
    enum class Spacing { uniform, logarithmic, custom };

    std::vector<double> points;
    Spacing spacing = Spacing::custom;

    static TimeGrid uniform(double t0, double t1, int count);
    static TimeGrid logarithmic(double t0, double t1, int count);
    static TimeGrid from_points(std::vector<double> points);

    // Throws ConfigError unless non-empty, strictly increasing and starting at t ≥ 0.
    void validate() const;
};

// ---------------------------------------------------------------------------
// Volterra oracle:  Ġ = −∫₀ᵗ f(t−s) G(s) ds,  G(0) = 1.

// First and second antiderivatives of the kernel, F1 = ∫₀^τ f and
// F2 = ∫₀^τ (τ−σ) f(σ) dσ.  Replaceable for tests with solvable kernels.
struct VolterraKernel {
    std::function<Complex(double)> F1;
    std::function<Complex(double)> F2;
};

VolterraKernel reservoir_kernel(const ReservoirConfig& cfg, double tol = kDefaultQuadratureTol);

struct VolterraOptions {
    double h = 1.0 / 1024.0;  // coarse step; a second march runs at h/2
    double tol = 1e-5;        // Richardson estimate must stay below this
    std::optional<VolterraKernel> kernel;
};

// G at t = 0, h, 2h, ..., steps·h: G piecewise linear against the exact kernel
// moments, trapezoidal rule in time.  Second order in h.
std::vector<Complex> volterra_march(const VolterraKernel& kernel, double h, int steps);

// Richardson-combined march at h and h/2, interpolated onto the grid.  Throws
// NumericalError(volterra, t) at the first point whose estimate exceeds tol.
std::vector<GSample> volterra_solve(const ReservoirConfig& cfg, const TimeGrid& grid,
                                    const VolterraOptions& opt = {});

// ---------------------------------------------------------------------------
// Laplace oracle:  G̃(u) = (u² − a²) / (u³ + z1 u + z_α u^α + z0), principal u^α.

struct Pole {
    Complex u;
    Complex residue;
};

struct LaplaceOptions {
    int nodes = 24;       // the estimate compares nodes against 2·nodes
    double tol = 1e-9;
    double guard = 1e-8;  // relative distance below which a pole is too close to a node
};

// Locates the poles of G̃ once per parameter set, then inverts the pole-free
// remainder on a Talbot contour and adds the pole terms in closed form.
class LaplaceInverter {
public:
    explicit LaplaceInverter(const ReservoirParams& params, LaplaceOptions opt = {});

    GSample operator()(double t) const;

    // Contribution of the pole on the positive imaginary axis (a bound state of
    // the qubit with the gapped continuum), and what remains after removing it.
    Complex bound_state(double t) const;
    GSample continuum(double t) const;

    Complex transform(Complex u) const;
    Complex denominator(Complex u) const;

    const std::vector<Pole>& poles() const noexcept { return poles_; }
    std::optional<Pole> bound_pole() const;
    // Zeros of the denominator inside the cut plane by the argument principle,
    // including the removable one at u = a.
    int zero_count() const noexcept { return zero_count_; }
    const ReservoirParams& params() const noexcept { return params_; }

private:
    Complex talbot(double t, int nodes, double& scale) const;

    ReservoirParams params_;
    LaplaceOptions opt_;
    std::vector<Pole> poles_;
    int bound_index_ = -1;
    int zero_count_ = 0;
};

GSample laplace_invert(const ReservoirParams& params, double t, const LaplaceOptions& opt = {});

// ---------------------------------------------------------------------------
// Power-law fits in log–log coordinates.

struct TailFit {
    double exponent = 0.0;
    double amplitude = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    double residual = 0.0;  // max |log y − fit|
};

inline constexpr double kTailResidualLimit = 0.05;

// Least squares only; never rejects.
TailFit fit_power_law(const std::vector<std::pair<double, double>>& samples);

// As fit_power_law, but throws ConvergenceError when the residual exceeds
// kTailResidualLimit.  Needs ≥ 8 samples, positive magnitudes, increasing t.
TailFit fit_tail_exponent(const std::vector<std::pair<double, double>>& samples);

}  // namespace edgedecay
