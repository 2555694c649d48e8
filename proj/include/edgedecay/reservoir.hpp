// reservoir.hpp — band-edge spectral density J_α, its correlation function and
// the complex constants of the Laplace-domain resolvent

#pragma once

#include <string>

#include "edgedecay/common.hpp"

namespace edgedecay {

// Physical parameters of J(ω) = 2A (ω−ω₀)^α Θ(ω−ω₀) / (a² + (ω−ω₀)²).
// Construction rejects anything outside A > 0, a > 0, 0 < α < 1, ω₀ > 0.
class ReservoirConfig {
public:
    ReservoirConfig(double A, double a, double alpha, double omega0);

    double A() const noexcept { return A_; }
    double a() const noexcept { return a_; }
    double alpha() const noexcept { return alpha_; }
    double omega0() const noexcept { return omega0_; }

    // Same reservoir with the coupling amplitude replaced.
    ReservoirConfig with_A(double A) const { return {A, a_, alpha_, omega0_}; }

    friend bool operator==(const ReservoirConfig&, const ReservoirConfig&) = default;

private:
    double A_;
    double a_;
    double alpha_;
    double omega0_;
};

// Constants derived from a ReservoirConfig.  With them the Laplace transform of G is
//   G̃(u) = (u² − a²) / (u³ + z1 u + z_alpha u^α + z0).
struct ReservoirParams {
    ReservoirConfig cfg;
    Complex z0;           // i π A a^α csc(πα/2)
    Complex z_alpha;      // −2 i π A e^{−iπα/2} csc(πα)
    double z1 = 0.0;      // π A a^{α−1} sec(πα/2) − a²
    double A_star = 0.0;  // coupling at which z1 vanishes
    double tau = 0.0;     // crossover time to the inverse-power-law regime
    double Omega_alpha = 0.0;  // ω₀ + a √(α/(2−α)), location of the maximum of J
    double M_alpha = 0.0;      // A α^{α/2} a^{α−2} (2−α)^{1−α/2}
};

ReservoirParams derive_params(const ReservoirConfig& cfg);

// A⋆ = a^{3−α} cos(πα/2) / π.
double critical_coupling(double a, double alpha);

// max{1, |3/z0|^{1/3}, |3 z_α/z0|^{1/α}, 3|z1/z0|}
double crossover_time(Complex z0, Complex z_alpha, double z1, double alpha);

// z0 exactly as typeset in the source derivation (with cos(πα/2) in place of
// csc(πα/2)).  Kept for audit output only; it is not the transform of J_α.
Complex printed_z0(const ReservoirConfig& cfg);

// ω₀ + a √(α(2−α)), the peak location as typeset in the source; audit only.
double printed_peak_location(const ReservoirConfig& cfg);

double spectral_density(double omega, const ReservoirConfig& cfg);

struct QuadratureValue {
    Complex value;
    double error = 0.0;
};

inline constexpr double kDefaultQuadratureTol = 1e-10;

// f(τ) = ∫₀^∞ J(ω) e^{−i(ω−ω₀)τ} dω for τ ≥ 0.  Throws ConvergenceError when the
// quadrature estimate exceeds tol.
QuadratureValue correlation_function(double tau, const ReservoirConfig& cfg,
                                     double tol = kDefaultQuadratureTol);

// First and second antiderivatives of f vanishing at τ = 0:
//   F1(τ) = ∫₀^τ f,   F2(τ) = ∫₀^τ (τ−σ) f(σ) dσ.
QuadratureValue correlation_integral(double tau, const ReservoirConfig& cfg,
                                     double tol = kDefaultQuadratureTol);
QuadratureValue correlation_double_integral(double tau, const ReservoirConfig& cfg,
                                            double tol = kDefaultQuadratureTol);

struct SummabilityReport {
    bool nonnegative = false;
    bool summable = false;
    double integral = 0.0;        // ∫ J dω by quadrature
    double closed_form = 0.0;     // z1 + a²
    double quadrature_error = 0.0;
    double min_sampled = 0.0;     // smallest J on the probe grid
};

SummabilityReport validate_spectral_density(const ReservoirConfig& cfg);

// Plain key-value text ("key = value", '#' comments) or a JSON object, keys
// A, a, alpha, omega0.  Unknown keys are ignored here.
ReservoirConfig reservoir_from_text(const std::string& text);

}  // namespace edgedecay
