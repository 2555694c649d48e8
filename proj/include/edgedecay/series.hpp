// series.hpp — G(t) from its double series of generalized Mittag-Leffler functions

#pragma once

#include "edgedecay/reservoir.hpp"
#include "edgedecay/sample.hpp"

namespace edgedecay {

struct SeriesOptions {
    double tol = 1e-10;
    int max_shells = 400;
    double max_ml_argument = 50.0;  // |z1| (a t)² beyond this is refused
};

// G(t) = Σ_n Σ_k (−1)ⁿ C(n,k) z_αᵏ z0^{n−k} t^{β−1}
//          [E^{n+1}_{2,β}(−z1 t²) − a² t² E^{n+1}_{2,β+2}(−z1 t²)],   β = 3n − αk + 1.
// Throws NumericalError(series, t) when the Mittag-Leffler argument is out of range,
// cancellation exceeds tol, or the shell budget runs out.
GSample g_series(double t, const ReservoirParams& params, const SeriesOptions& opt = {});

// Power series for z1 = 0 (A = A⋆).  Throws ConfigError if |z1| > 1e−12 max(1, a²).
GSample g_star_series(double t, const ReservoirParams& params, const SeriesOptions& opt = {});

struct ConvergedDomain {
    double t_max = 0.0;   // 0 when even the first probe fails
    int probes_passed = 0;
    int probes_total = 0;
};

// Walks a logarithmic probe grid from 0.01/a to 100/a (10 points per decade) and
// returns the end of the leading run of probes where g_series meets tol and agrees
// with the Laplace-inversion oracle to 10·tol.
ConvergedDomain converged_domain(const ReservoirParams& params, double tol);

}  // namespace edgedecay
