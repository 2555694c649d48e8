// quadrature.hpp — thin wrappers over Boost double-exponential rules (internal)

#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace edgedecay::detail {

template <class T>
struct Integral {
    T value{};
    double error = 0.0;  // absolute estimate
    double l1 = 0.0;     // ∫|f|, for rounding estimates
};

// ∫₀^∞ f.  tol is the relative termination tolerance handed to the rule.
template <class F>
auto integrate_half_line(F&& f, double tol) {
    using T = decltype(f(1.0));
    thread_local boost::math::quadrature::exp_sinh<double> rule(12);
    Integral<T> out;
    double err = 0.0;
    double l1 = 0.0;
    out.value = rule.integrate(f, 0.0, std::numeric_limits<double>::infinity(), tol, &err, &l1);
    out.l1 = l1;
    out.error = err + 4.0 * std::numeric_limits<double>::epsilon() * l1;
    return out;
}

// ∫_lo^hi f over a finite interval; endpoint singularities are fine.
template <class F>
auto integrate_interval(F&& f, double lo, double hi, double tol) {
    using T = decltype(f(lo));
    thread_local boost::math::quadrature::tanh_sinh<double> rule(15);
    Integral<T> out;
    double err = 0.0;
    double l1 = 0.0;
    out.value = rule.integrate(f, lo, hi, tol, &err, &l1);
    out.l1 = l1;
    out.error = err + 4.0 * std::numeric_limits<double>::epsilon() * l1;
    return out;
}

}  // namespace edgedecay::detail
