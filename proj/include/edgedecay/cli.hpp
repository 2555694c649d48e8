// cli.hpp — run / compare / sweep / validate verbs behind the command-line tool
//
// Exit codes: 0 success (FAIL rows in a comparison are report content),
// 1 configuration error, 2 numerical failure.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "edgedecay/config_text.hpp"
#include "edgedecay/dynamics.hpp"
#include "edgedecay/oracles.hpp"
#include "edgedecay/reservoir.hpp"

namespace edgedecay {

inline constexpr const char* kManifestSchema = "edgedecay.manifest/1";

struct GridSpec {
    double t_min = 0.01;
    std::optional<double> t_max;  // default 1000 τ
    int points = 200;
    TimeGrid::Spacing scale = TimeGrid::Spacing::logarithmic;

    TimeGrid build(double tau) const;
    double end(double tau) const { return t_max ? *t_max : 1000.0 * tau; }
};

struct RunSpec {
    ReservoirConfig reservoir{1.0, 1.0, 0.5, 1.0};
    GridSpec grid;
    std::vector<Method> methods{Method::laplace};
    double tol = 1e-6;  // gate for pairwise comparisons
    RoutingPolicy policy;
    DensityMatrix initial{0.5, Complex(0.5, 0.0)};
    std::string out_dir = "out";

    // sweep only
    std::vector<double> alphas;
    std::vector<double> A_values;
    int workers = 1;
    double fit_lo_tau = 100.0;
    double fit_hi_tau = 1000.0;
    int fit_points = 40;
};

// Keys: A a alpha omega0 | methods t_min t_max t_max_tau points scale |
// rho11_0 re_rho10_0 im_rho10_0 | tol out workers | alphas A_values
// fit_lo_tau fit_hi_tau fit_points | series_tol laplace_tol volterra_tol volterra_max_steps.
// Throws ConfigError naming the offending key or bound.
RunSpec run_spec_from_config(const ConfigText& cfg);

// Derived constants, D_α, tail powers, bound state, audit of the typeset
// constants and (for rational α) the root set.  No timing data.
nlohmann::json describe(const GEvaluator& evaluator);

struct PairComparison {
    Method first;
    Method second;
    int common_points = 0;
    double max_abs_diff = 0.0;
    double t_at_max = 0.0;
    bool pass = false;
    std::vector<std::pair<double, double>> deviations;  // (t, |ΔG|)
};

// Pairwise deviations over the points where both methods succeeded.
std::vector<PairComparison> compare_methods(const std::vector<Method>& methods,
                                            const std::vector<std::vector<std::optional<GSample>>>& values,
                                            const std::vector<double>& t, double tol);

struct NegativeControl {
    double t = 0.0;
    double relative_deviation = 0.0;
    double gate = 0.1;
    bool passes_gate = false;  // expected false
};

// Leading asymptotic law against the Laplace oracle at 0.1 τ.
NegativeControl asymptotic_negative_control(const GEvaluator& evaluator);

struct SweepRow {
    double alpha = 0.0;
    double A = 0.0;
    double tau = 0.0;
    double fitted_exponent = 0.0;     // |G| over [fit_lo, fit_hi] τ
    double predicted = 0.0;           // −(1+α)
    double deviation = 0.0;
    double continuum_exponent = 0.0;  // same fit with the bound-state pole removed
    double continuum_deviation = 0.0;
    double continuum_amplitude = 0.0;
    double d_alpha_abs = 0.0;
    double bound_weight = 0.0;        // |residue| of the bound-state pole
    double fit_residual = 0.0;
    std::string error;                // empty on success
};

SweepRow sweep_entry(const ReservoirConfig& cfg, const RunSpec& spec);

int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err);
int compare_command(const RunSpec& spec, std::ostream& out, std::ostream& err);
int sweep_command(const RunSpec& spec, std::ostream& out, std::ostream& err);
int validate_command(const RunSpec& spec, std::ostream& out, std::ostream& err);

// edgedecay <run|compare|sweep|validate> --config PATH [--out DIR] [--tol X] [--workers N]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace edgedecay
