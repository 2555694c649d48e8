// rational.hpp — G(t) for rational α = p/q through the roots of
//   Q(z) = z^{3q} + z1 z^q + z_α z^p + z0,   u = z^q

#pragma once

#include <optional>
#include <vector>

#include "edgedecay/reservoir.hpp"
#include "edgedecay/sample.hpp"

namespace edgedecay {

struct RationalOrder {
    int p = 1;
    int q = 2;

    RationalOrder(int p, int q);  // requires 0 < p < q, gcd(p, q) = 1
    double value() const noexcept { return double(p) / q; }

    // p/q in lowest terms with q ≤ max_q matching alpha to 1e−12, if any.
    static std::optional<RationalOrder> from_alpha(double alpha, int max_q = 24);
};

struct Root {
    Complex zeta;
    int multiplicity = 1;
    double residual = 0.0;  // max scaled |Q^{(i)}(ζ)|, i < multiplicity
};

struct RootSet {
    std::vector<Root> roots;
    int degree = 0;

    int total_multiplicity() const;
    double max_residual() const;
};

// Ascending coefficients c[0..3q], c[3q] = 1.
std::vector<Complex> build_q_polynomial(const RationalOrder& ord, const ReservoirParams& params);

// Value of Σ c_k z^k, and |c_k| |z|^k summed, the natural size for residuals.
Complex eval_polynomial(const std::vector<Complex>& c, Complex z);
double polynomial_scale(const std::vector<Complex>& c, Complex z);

// Companion-matrix eigenvalues, Newton polishing, then clustering: roots closer
// than 1e−7 max|ζ| merge, and wider groups (up to 1e−4) merge when the centroid
// passes the derivative residual gates as a multiple root.  Throws
// ConvergenceError if any root misses tol.
RootSet find_roots(const std::vector<Complex>& coeffs, double tol = 1e-10);

// b[l][k−1], k = 1..m_l, for (z^{2q} − a²)/Q(z):
//   b_{l,k} = H^{(k−1)}(ζ_l) / ((m_l−k)! (k−1)!),  H = (z^{2q} − a²)(z−ζ_l)^{m_l}/Q.
// Near ζ_l the function is Σ_k b_{l,k} (m_l−k)! / (z−ζ_l)^{m_l−k+1}.
struct ResidueTable {
    std::vector<std::vector<Complex>> b;
    std::vector<bool> removable;  // common root with the numerator
    bool ill_conditioned = false;  // two roots closer than 1e−6 max|ζ|
};

ResidueTable residue_coefficients(const RootSet& rs, const RationalOrder& ord, const ReservoirConfig& cfg);

// Partial-fraction sum of the table at z.
Complex partial_fraction_value(const RootSet& rs, const ResidueTable& table, Complex z);

// Literal integrand Φ(η, ξ) of the double-integral representation, restricted to root l
// (l < 0 sums all roots).
Complex phi_integrand(double eta, double xi, int l, const RationalOrder& ord, const RootSet& rs,
                      const ResidueTable& table);

// ∫₀^∞ Φ_l(η, ξ) dη in closed form; agrees with quadrature of phi_integrand when
// Re ζ_l < cos(π/q) ξ^{1/q} and continues it analytically otherwise.
Complex eta_marginal(double xi, int l, const RationalOrder& ord, const RootSet& rs, const ResidueTable& table);

struct RationalOptions {
    double tol = 1e-10;
};

// G(t) = ∫₀^∞ e^{−ξt} Σ_l eta_marginal(ξ, l) dξ  +  Σ residues of roots with |arg ζ| < π/q.
// The first part is the double integral with its inner integral done exactly.  The
// second holds the poles of G̃ on the principal sheet, which the double integral omits.
GSample g_rational(double t, const RationalOrder& ord, const RootSet& rs, const ResidueTable& table,
                   const ReservoirConfig& cfg, const RationalOptions& opt = {});

// The literal double integral by nested quadrature.  Throws NumericalError(rational, t)
// when some root has Re ζ_l ≥ 0, where the η integral diverges.
GSample g_rational_literal(double t, const RationalOrder& ord, const RootSet& rs, const ResidueTable& table,
                           const RationalOptions& opt = {});

// Everything above bundled for one parameter set.
class RationalPath {
public:
    RationalPath(const ReservoirParams& params, const RationalOrder& ord);

    GSample operator()(double t, const RationalOptions& opt = {}) const;
    // Residue terms only (principal-sheet poles), and the branch-cut integral alone.
    Complex pole_part(double t) const;
    GSample cut_part(double t, const RationalOptions& opt = {}) const;

    const RationalOrder& order() const noexcept { return ord_; }
    const std::vector<Complex>& coefficients() const noexcept { return coeffs_; }
    const RootSet& roots() const noexcept { return roots_; }
    const ResidueTable& table() const noexcept { return table_; }
    // Roots inside |arg ζ| < π/q that are not removable.
    std::vector<int> principal_roots() const;

private:
    ReservoirParams params_;
    RationalOrder ord_;
    std::vector<Complex> coeffs_;
    RootSet roots_;
    ResidueTable table_;
};

}  // namespace edgedecay
