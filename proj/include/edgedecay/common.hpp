// common.hpp — shared scalar types, method tags and error classes

#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <string_view>

namespace edgedecay {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

// Evaluation route that produced a value of G(t).
enum class Method { series, star_series, rational, asymptotic, volterra, laplace };

std::string_view to_string(Method m) noexcept;
Method method_from_string(std::string_view name);

// Invalid user-facing input (configuration, grids, initial states).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A quadrature or series inside a building block missed its target.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Evaluation of G(t) by a given method failed; carries the method and time.
class NumericalError : public std::runtime_error {
public:
    NumericalError(Method method, double t, const std::string& what)
        : std::runtime_error(what), method_(method), t_(t) {}

    Method method() const noexcept { return method_; }
    double t() const noexcept { return t_; }

private:
    Method method_;
    double t_;
};

}  // namespace edgedecay
