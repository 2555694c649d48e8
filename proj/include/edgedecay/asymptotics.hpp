// asymptotics.hpp — long-time inverse power laws of G(t)

#pragma once

#include <utility>
#include <vector>

#include "edgedecay/reservoir.hpp"
#include "edgedecay/sample.hpp"

namespace edgedecay {

// D_α = −a² z_α / (z0² Γ(−α))
//     = 2iα a^{2(1−α)} e^{−iπα/2} csc(πα) sin²(πα/2) / (πA Γ(1−α)).
// The branch-cut part of G behaves as −D_α t^{−1−α}.
Complex d_alpha(const ReservoirParams& params);

// The same coefficient as typeset in the source derivation (sec² in place of
// sin²).  Audit output only.
Complex printed_d_alpha(const ReservoirConfig& cfg);

// One (n, k, j) term of the small-u expansion of G̃, inverted term by term:
//   lead_coeff t^{lead_power} + shift_coeff t^{shift_power},
// lead_power = −1−s, shift_power = −3−s, s = α(n−k) + k + 2j.
struct TripleSumTerm {
    Complex lead_coeff;
    double lead_power = 0.0;
    Complex shift_coeff;
    double shift_power = 0.0;
};

TripleSumTerm triple_sum_term(const ReservoirParams& params, int n, int k, int j);

struct AsymptoticExpansion {
    Complex leading_coeff;                               // −D_α
    double leading_power = 0.0;                          // −1−α
    std::vector<std::pair<Complex, double>> correction_terms;  // (coefficient, power), powers descending
};

// Leading term plus the first n_shells groups of equal power.
AsymptoticExpansion expansion(const ReservoirParams& params, int n_shells);

GSample g_asymptotic(double t, const ReservoirParams& params, int n_shells = 0);

double timescale_tau(const ReservoirParams& params);

// (population power, coherence power) = (−2−2α, −1−α)
std::pair<double, double> tail_exponent_prediction(const ReservoirConfig& cfg);

}  // namespace edgedecay
