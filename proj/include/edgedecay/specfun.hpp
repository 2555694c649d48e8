// specfun.hpp — reciprocal Gamma and the three-parameter Mittag-Leffler function

#pragma once

#include <complex>

#include "edgedecay/common.hpp"

namespace edgedecay {

// 1/Γ(z), entire.  Exactly zero at z = 0, −1, −2, ...
Complex reciprocal_gamma(Complex z);
double reciprocal_gamma(double x);

// log Γ(x) for x > 0.
double log_gamma(double x);

// Orders of E^γ_{α,β}(z) = Σ_n (γ)_n zⁿ / (n! Γ(αn+β)).
struct MLParams {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;
};

struct MLValue {
    Complex value;
    double error = 0.0;  // truncation + rounding estimate
    int terms = 0;
};

struct MLOptions {
    double tol = 1e-13;       // absolute when |E| ≤ 1, relative above
    double max_abs_z = 50.0;  // larger arguments are refused
    int max_terms = 5000;
    bool check_rounding = true;  // off: the caller propagates abs_sum itself
};

// Throws ConfigError on non-positive orders, ConvergenceError when |z| exceeds
// max_abs_z, when cancellation pushes the rounding estimate above tol, or when the
// term budget runs out before the tail bound meets tol.
MLValue mittag_leffler(const MLParams& p, Complex z, const MLOptions& opt = {});

// Γ(β)·E^γ_{α,β}(z) in extended precision.  β may be large (Γ(β) overflows a
// double long before this product does).  abs_sum is Σ|terms|, the scale of the
// rounding error.  Same failure modes as mittag_leffler.
struct ScaledML {
    std::complex<long double> value;
    long double abs_sum = 0.0L;
    long double error = 0.0L;
};

ScaledML mittag_leffler_scaled(const MLParams& p, std::complex<long double> z,
                               const MLOptions& opt = {});

// The n-th series term, evaluated independently of the summation loop.
Complex mittag_leffler_term(const MLParams& p, Complex z, int n);

}  // namespace edgedecay
