// rational.cpp — roots of Q, partial fractions and the rational-α evaluation of G(t)

#include "edgedecay/rational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "quadrature.hpp"

namespace edgedecay {
namespace {

using Series = std::vector<Complex>;  // truncated Taylor coefficients

Series series_mul(const Series& a, const Series& b, std::size_t order) {
    Series out(order, 0.0);
    for (std::size_t i = 0; i < std::min(a.size(), order); ++i) {
        for (std::size_t j = 0; j < std::min(b.size(), order - i); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Series series_div(const Series& a, const Series& b, std::size_t order) {
    Series out(order, 0.0);
    for (std::size_t n = 0; n < order; ++n) {
        Complex acc = n < a.size() ? a[n] : 0.0;
        for (std::size_t j = 1; j <= n && j < b.size(); ++j) acc -= b[j] * out[n - j];
        out[n] = acc / b[0];
    }
    return out;
}

// exp(A) for A(0) = 0
Series series_exp(const Series& a, std::size_t order) {
    Series out(order, 0.0);
    out[0] = 1.0;
    for (std::size_t n = 1; n < order; ++n) {
        Complex acc = 0.0;
        for (std::size_t i = 1; i <= n && i < a.size(); ++i) acc += double(i) * a[i] * out[n - i];
        out[n] = acc / double(n);
    }
    return out;
}

// Taylor coefficients of (ζ + δ)^n in δ
Series power_series(Complex zeta, int n, std::size_t order) {
    Series out(order, 0.0);
    double binom = 1.0;
    for (std::size_t i = 0; i < order && int(i) <= n; ++i) {
        out[i] = binom * std::pow(zeta, n - int(i));
        binom *= double(n - int(i)) / double(i + 1);
    }
    return out;
}

std::vector<Complex> derivative(const std::vector<Complex>& c) {
    std::vector<Complex> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(double(k) * c[k]);
    if (d.empty()) d.push_back(0.0);
    return d;
}

Complex newton_polish(const std::vector<Complex>& c, Complex z) {
    const auto dc = derivative(c);
    for (int it = 0; it < 80; ++it) {
        const Complex f = eval_polynomial(c, z);
        const Complex df = eval_polynomial(dc, z);
        if (df == Complex(0.0)) break;
        const Complex step = f / df;
        const Complex next = z - step;
        if (std::abs(eval_polynomial(c, next)) > std::abs(f) && it > 3) break;
        z = next;
        if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z))) break;
    }
    return z;
}

// max over i < m of |Q^{(i)}(ζ)| scaled by the matching polynomial_scale
double multiplicity_residual(const std::vector<Complex>& c, Complex zeta, int m) {
    double worst = 0.0;
    std::vector<Complex> d = c;
    for (int i = 0; i < m; ++i) {
        const double scale = polynomial_scale(d, zeta);
        worst = std::max(worst, scale > 0.0 ? std::abs(eval_polynomial(d, zeta)) / scale : 0.0);
        d = derivative(d);
    }
    return worst;
}

Complex merge_and_polish(const std::vector<Complex>& c, const std::vector<Complex>& group) {
    Complex centroid = std::accumulate(group.begin(), group.end(), Complex(0.0)) / double(group.size());
    std::vector<Complex> d = c;
    for (std::size_t i = 1; i < group.size(); ++i) d = derivative(d);
    return newton_polish(d, centroid);
}

int gcd(int a, int b) { return b == 0 ? a : gcd(b, a % b); }

double factorial(int n) { return std::tgamma(n + 1.0); }

}  // namespace

RationalOrder::RationalOrder(int p_, int q_) : p(p_), q(q_) {
    if (!(p > 0 && p < q)) throw ConfigError("RationalOrder: need 0 < p < q");
    if (gcd(p, q) != 1) throw ConfigError("RationalOrder: p and q must be coprime");
}

std::optional<RationalOrder> RationalOrder::from_alpha(double alpha, int max_q) {
    for (int q = 2; q <= max_q; ++q) {
        const int p = int(std::lround(alpha * q));
        if (p > 0 && p < q && gcd(p, q) == 1 && std::abs(alpha - double(p) / q) < 1e-12) return RationalOrder(p, q);
    }
    return std::nullopt;
}

int RootSet::total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
}

double RootSet::max_residual() const {
    double w = 0.0;
    for (const auto& r : roots) w = std::max(w, r.residual);
    return w;
}

std::vector<Complex> build_q_polynomial(const RationalOrder& ord, const ReservoirParams& params) {
    if (std::abs(params.cfg.alpha() - ord.value()) > 1e-12) {
        throw ConfigError("build_q_polynomial: params were derived for alpha != p/q");
    }
    std::vector<Complex> c(3 * ord.q + 1, 0.0);
    c[3 * ord.q] = 1.0;
    c[ord.q] += params.z1;
    c[ord.p] += params.z_alpha;
    c[0] += params.z0;
    return c;
}

Complex eval_polynomial(const std::vector<Complex>& c, Complex z) {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
}

double polynomial_scale(const std::vector<Complex>& c, Complex z) {
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
}

RootSet find_roots(const std::vector<Complex>& coeffs, double tol) {
    const int d = int(coeffs.size()) - 1;
    if (d < 1) throw ConfigError("find_roots: degree must be >= 1");
    if (std::abs(coeffs[d] - 1.0) > 1e-14) throw ConfigError("find_roots: polynomial must be monic");

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -coeffs[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw ConvergenceError("find_roots: eigenvalue solver failed");

    std::vector<Complex> raw;
    double R = 0.0;
    for (int i = 0; i < d; ++i) {
        raw.push_back(newton_polish(coeffs, solver.eigenvalues()[i]));
        R = std::max(R, std::abs(raw.back()));
    }
    R = std::max(R, std::numeric_limits<double>::min());

    // single-linkage groups at a given radius
    auto group_at = [&](double radius) {
        std::vector<int> parent(d);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                if (std::abs(raw[i] - raw[j]) < radius) parent[find(i)] = find(j);
            }
        }
        std::vector<std::vector<int>> groups;
        std::vector<int> slot(d, -1);
        for (int i = 0; i < d; ++i) {
            const int r = find(i);
            if (slot[r] < 0) {
                slot[r] = int(groups.size());
                groups.emplace_back();
            }
            groups[slot[r]].push_back(i);
        }
        return groups;
    };

    RootSet rs;
    rs.degree = d;
    std::vector<bool> used(d, false);
    for (const auto& wide : group_at(1e-4 * R)) {
        std::vector<Complex> members;
        for (int i : wide) members.push_back(raw[i]);
        if (wide.size() > 1) {
            const Complex z = merge_and_polish(coeffs, members);
            const double res = multiplicity_residual(coeffs, z, int(members.size()));
            if (res <= tol) {
                rs.roots.push_back({z, int(members.size()), res});
                for (int i : wide) used[i] = true;
            }
        }
    }
    // the rest: merge only below 1e−7 R, keep others simple
    for (const auto& tight : group_at(1e-7 * R)) {
        std::vector<Complex> members;
        for (int i : tight) {
            if (!used[i]) members.push_back(raw[i]);
        }
        if (members.empty()) continue;
        const Complex z = members.size() > 1 ? merge_and_polish(coeffs, members) : members[0];
        const double res = multiplicity_residual(coeffs, z, int(members.size()));
        if (res > tol) {
            throw ConvergenceError("find_roots: root " + std::to_string(z.real()) + "+" + std::to_string(z.imag()) +
                                   "i misses the residual gate (" + std::to_string(res) + ")");
        }
        rs.roots.push_back({z, int(members.size()), res});
    }
    if (rs.total_multiplicity() != d) throw ConvergenceError("find_roots: multiplicities do not add up to the degree");
    std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& x, const Root& y) {
        return std::arg(x.zeta) < std::arg(y.zeta) || (std::arg(x.zeta) == std::arg(y.zeta) && std::abs(x.zeta) < std::abs(y.zeta));
    });
    return rs;
}

ResidueTable residue_coefficients(const RootSet& rs, const RationalOrder& ord, const ReservoirConfig& cfg) {
    const double a = cfg.a();
    ResidueTable table;
    double R = 0.0;
    for (const auto& r : rs.roots) R = std::max(R, std::abs(r.zeta));
    for (std::size_t l = 0; l < rs.roots.size(); ++l) {
        const Complex zeta = rs.roots[l].zeta;
        const int m = rs.roots[l].multiplicity;
        const std::size_t order = std::size_t(m);

        // numerator z^{2q} − a² around ζ
        Series num = power_series(zeta, 2 * ord.q, order);
        num[0] -= a * a;
        const double num_scale = std::pow(std::abs(zeta), 2 * ord.q) + a * a;
        const bool removable = std::abs(num[0]) <= 1e-8 * num_scale;

        // cofactor ∏_{j≠l} (z − ζ_j)^{m_j} around ζ
        Series cof(order, 0.0);
        cof[0] = 1.0;
        for (std::size_t j = 0; j < rs.roots.size(); ++j) {
            if (j == l) continue;
            const Complex gap = zeta - rs.roots[j].zeta;
            if (std::abs(gap) < 1e-6 * R) table.ill_conditioned = true;
            for (int rep = 0; rep < rs.roots[j].multiplicity; ++rep) cof = series_mul(cof, Series{gap, 1.0}, order);
        }
        const Series H = series_div(num, cof, order);
        std::vector<Complex> b(m, 0.0);
        if (!removable) {
            // H^{(k−1)}/(k−1)! is the Taylor coefficient H[k−1]
            for (int k = 1; k <= m; ++k) b[k - 1] = H[k - 1] / factorial(m - k);
        }
        table.b.push_back(std::move(b));
        table.removable.push_back(removable);
    }
    return table;
}

Complex partial_fraction_value(const RootSet& rs, const ResidueTable& table, Complex z) {
    Complex acc = 0.0;
    for (std::size_t l = 0; l < rs.roots.size(); ++l) {
        const int m = rs.roots[l].multiplicity;
        const Complex d = z - rs.roots[l].zeta;
        for (int k = 1; k <= m; ++k) acc += table.b[l][k - 1] * factorial(m - k) / std::pow(d, m - k + 1);
    }
    return acc;
}

Complex phi_integrand(double eta, double xi, int l, const RationalOrder& ord, const RootSet& rs,
                      const ResidueTable& table) {
    const double r = std::pow(xi, 1.0 / ord.q);
    const double s = std::sin(kPi / ord.q), c = std::cos(kPi / ord.q);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (l >= 0 && int(i) != l) continue;
        const int m = rs.roots[i].multiplicity;
        const Complex env = std::sin(eta * r * s) * std::exp(eta * (rs.roots[i].zeta - c * r));
        for (int k = 1; k <= m; ++k) acc += table.b[i][k - 1] / kPi * std::pow(eta, m - k) * env;
    }
    return acc;
}

Complex eta_marginal(double xi, int l, const RationalOrder& ord, const RootSet& rs, const ResidueTable& table) {
    const double r = std::pow(xi, 1.0 / ord.q);
    const Complex zm = std::polar(r, -kPi / ord.q), zp = std::polar(r, kPi / ord.q);
    Complex acc = 0.0;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (l >= 0 && int(i) != l) continue;
        if (table.removable[i]) continue;
        const int m = rs.roots[i].multiplicity;
        const Complex zeta = rs.roots[i].zeta;
        for (int k = 1; k <= m; ++k) {
            const int j = m - k + 1;
            acc += table.b[i][k - 1] * factorial(m - k) * (std::pow(zm - zeta, -j) - std::pow(zp - zeta, -j));
        }
    }
    return acc / Complex(0.0, 2.0 * kPi);
}

namespace {

// Residue of e^{ut} G̃(u) at u = ζ^q, written in z: Σ_j c_j γ_{j−1} with γ the
// Taylor coefficients of q z^{q−1} e^{z^q t} at ζ.
Complex pole_residue(const Root& root, const std::vector<Complex>& b, int q, double t) {
    const int m = root.multiplicity;
    const std::size_t order = std::size_t(m);
    const Complex zeta = root.zeta;
    Series w = power_series(zeta, q, order);
    const Complex u0 = w[0];
    w[0] = 0.0;
    for (auto& x : w) x *= t;
    Series g = series_mul(series_exp(w, order), power_series(zeta, q - 1, order), order);
    Complex acc = 0.0;
    for (int k = 1; k <= m; ++k) acc += b[k - 1] * factorial(m - k) * g[m - k];
    return double(q) * std::exp(u0 * t) * acc;
}

bool in_principal_sector(Complex zeta, int q) { return std::abs(std::arg(zeta)) < kPi / q - 1e-12; }

GSample cut_integral(double t, const RationalOrder& ord, const RootSet& rs, const ResidueTable& table,
                     const RationalOptions& opt) {
    auto res = detail::integrate_half_line(
        [&](double xi) { return std::exp(-xi * t) * eta_marginal(xi, -1, ord, rs, table); },
        std::clamp(0.01 * opt.tol, 1e-15, 1e-6));
    if (!std::isfinite(std::abs(res.value)) || res.error > opt.tol) {
        throw NumericalError(Method::rational, t,
                             "rational: cut integral error " + std::to_string(res.error) + " exceeds tolerance");
    }
    return {t, res.value, res.error, Method::rational};
}

}  // namespace

GSample g_rational(double t, const RationalOrder& ord, const RootSet& rs, const ResidueTable& table,
                   const ReservoirConfig& cfg, const RationalOptions& opt) {
    if (std::abs(cfg.alpha() - ord.value()) > 1e-12) throw ConfigError("g_rational: alpha != p/q");
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("g_rational: t must be finite and > 0");
    GSample s = cut_integral(t, ord, rs, table, opt);
    for (std::size_t l = 0; l < rs.roots.size(); ++l) {
        if (table.removable[l] || !in_principal_sector(rs.roots[l].zeta, ord.q)) continue;
        s.value += pole_residue(rs.roots[l], table.b[l], ord.q, t);
    }
    return s;
}

GSample g_rational_literal(double t, const RationalOrder& ord, const RootSet& rs, const ResidueTable& table,
                           const RationalOptions& opt) {
    for (std::size_t l = 0; l < rs.roots.size(); ++l) {
        if (!table.removable[l] && rs.roots[l].zeta.real() >= 0.0) {
            throw NumericalError(Method::rational, t,
                                 "rational: root with Re >= 0 makes the eta integral diverge; "
                                 "the double-integral form does not apply to this configuration");
        }
    }
    const double inner_tol = std::clamp(0.01 * opt.tol, 1e-14, 1e-6);
    double err = 0.0;
    auto outer = detail::integrate_half_line(
        [&](double xi) {
            auto inner = detail::integrate_half_line(
                [&](double eta) { return phi_integrand(eta, xi, -1, ord, rs, table); }, inner_tol);
            err = std::max(err, inner.error);
            return std::exp(-xi * t) * inner.value;
        },
        inner_tol);
    GSample s{t, outer.value, outer.error + err, Method::rational};
    if (s.error_bound > opt.tol) {
        throw NumericalError(Method::rational, t, "rational: double integral missed tolerance");
    }
    return s;
}

RationalPath::RationalPath(const ReservoirParams& params, const RationalOrder& ord)
    : params_(params),
      ord_(ord),
      coeffs_(build_q_polynomial(ord, params)),
      roots_(find_roots(coeffs_)),
      table_(residue_coefficients(roots_, ord, params.cfg)) {}

GSample RationalPath::operator()(double t, const RationalOptions& opt) const {
    return g_rational(t, ord_, roots_, table_, params_.cfg, opt);
}

GSample RationalPath::cut_part(double t, const RationalOptions& opt) const {
    return cut_integral(t, ord_, roots_, table_, opt);
}

Complex RationalPath::pole_part(double t) const {
    Complex acc = 0.0;
    for (int l : principal_roots()) acc += pole_residue(roots_.roots[l], table_.b[l], ord_.q, t);
    return acc;
}

std::vector<int> RationalPath::principal_roots() const {
    std::vector<int> out;
    for (std::size_t l = 0; l < roots_.roots.size(); ++l) {
        if (!table_.removable[l] && in_principal_sector(roots_.roots[l].zeta, ord_.q)) out.push_back(int(l));
    }
    return out;
}

}  // namespace edgedecay
