// laplace.cpp — pole search on the cut plane and Talbot inversion of the remainder

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "edgedecay/oracles.hpp"

namespace edgedecay {
namespace {

constexpr double kCutMargin = 1e-6;  // wedge |arg u| < π − margin for the zero count

// Winding of D along the segment u(s), s in [0, 1], by adaptive bisection.
template <class Path, class Fn>
double winding(const Path& path, const Fn& D, double s0, double s1, Complex d0, Complex d1, int depth) {
    const double step = std::arg(d1 / d0);
    if (depth > 40 || (std::abs(step) < 0.2 && depth > 3)) return step;
    const double sm = 0.5 * (s0 + s1);
    const Complex dm = D(path(sm));
    return winding(path, D, s0, sm, d0, dm, depth + 1) + winding(path, D, sm, s1, dm, d1, depth + 1);
}

template <class Path, class Fn>
double winding(const Path& path, const Fn& D) {
    return winding(path, D, 0.0, 1.0, D(path(0.0)), D(path(1.0)), 0);
}

}  // namespace

LaplaceInverter::LaplaceInverter(const ReservoirParams& params, LaplaceOptions opt)
    : params_(params), opt_(opt) {
    if (opt_.nodes < 8) throw ConfigError("laplace: need at least 8 contour nodes");
    const double a = params.cfg.a(), al = params.cfg.alpha();
    const double R0 = std::sqrt(std::abs(params.z1) + std::abs(params.z_alpha) + std::abs(params.z0)) + 1.0;
    auto D = [this](Complex u) { return denominator(u); };
    auto dD = [&](Complex u) {
        return 3.0 * u * u + params_.z1 + al * params_.z_alpha * std::pow(u, al - 1.0);
    };
    auto size = [&](Complex u) {
        const double r = std::abs(u);
        return r * r * r + std::abs(params_.z1) * r + std::abs(params_.z_alpha) * std::pow(r, al) +
               std::abs(params_.z0);
    };

    // Newton from a polar lattice of starts
    std::vector<Complex> zeros;
    for (int ir = 0; ir < 10; ++ir) {
        const double r = R0 * std::pow(0.05, 1.0 - ir / 9.0);
        for (int ia = 0; ia < 24; ++ia) {
            Complex u = std::polar(r, -kPi + (ia + 0.5) * 2.0 * kPi / 24.0);
            bool ok = false;
            for (int it = 0; it < 200; ++it) {
                Complex step = D(u) / dD(u);
                if (!std::isfinite(std::abs(step))) break;
                if (std::abs(step) > 0.5 * std::abs(u)) step *= 0.5 * std::abs(u) / std::abs(step);
                u -= step;
                if (std::abs(std::arg(u)) > kPi - 1e-12 || std::abs(u) < 1e-12) break;
                if (std::abs(step) < 1e-15 * std::abs(u)) {
                    ok = true;
                    break;
                }
            }
            if (!ok || std::abs(D(u)) > 1e-11 * size(u)) continue;
            const bool seen = std::any_of(zeros.begin(), zeros.end(),
                                          [&](Complex z) { return std::abs(z - u) < 1e-8 * R0; });
            if (!seen) zeros.push_back(u);
        }
    }

    // Argument principle over the wedge, radius 2R0, small arc 1e−6 around the branch point
    const double R = 2.0 * R0, eps = 1e-6, edge = kPi - kCutMargin;
    double total = 0.0;
    total += winding([&](double s) { return std::polar(R, -edge + 2.0 * edge * s); }, D);
    total += winding([&](double s) { return std::polar(R + (eps - R) * s, edge); }, D);
    total += winding([&](double s) { return std::polar(eps, edge - 2.0 * edge * s); }, D);
    total += winding([&](double s) { return std::polar(eps + (R - eps) * s, -edge); }, D);
    zero_count_ = int(std::lround(total / (2.0 * kPi)));

    const int inside = int(std::count_if(zeros.begin(), zeros.end(), [&](Complex z) {
        return std::abs(std::arg(z)) < edge && std::abs(z) > eps && std::abs(z) < R;
    }));
    if (inside != zero_count_) {
        throw NumericalError(Method::laplace, 0.0,
                             "laplace: pole search found " + std::to_string(inside) +
                                 " zeros but the argument principle counts " + std::to_string(zero_count_));
    }

    for (Complex u : zeros) {
        // u = a cancels against the numerator
        if (std::abs(u - a) < 1e-6 * a) continue;
        if (std::abs(u.real()) < 1e-10 * std::abs(u) && u.imag() > 0.0) {
            u = Complex(0.0, u.imag());
            bound_index_ = int(poles_.size());
        }
        poles_.push_back({u, (u * u - a * a) / dD(u)});
    }
}

Complex LaplaceInverter::denominator(Complex u) const {
    const double al = params_.cfg.alpha();
    return u * u * u + params_.z1 * u + params_.z_alpha * std::pow(u, al) + params_.z0;
}

Complex LaplaceInverter::transform(Complex u) const {
    const double a = params_.cfg.a();
    return (u * u - a * a) / denominator(u);
}

std::optional<Pole> LaplaceInverter::bound_pole() const {
    if (bound_index_ < 0) return std::nullopt;
    return poles_[bound_index_];
}

Complex LaplaceInverter::bound_state(double t) const {
    if (bound_index_ < 0) return 0.0;
    const Pole& p = poles_[bound_index_];
    return p.residue * std::exp(p.u * t);
}

// Weideman's cotangent contour, midpoint rule in θ.
Complex LaplaceInverter::talbot(double t, int nodes, double& scale) const {
    constexpr double c1 = 0.5017, c2 = 0.6407, c3 = 0.6122, c4 = 0.2645;
    const double mu = nodes / t;
    Complex sum = 0.0;
    scale = 0.0;
    for (int k = 0; k < nodes; ++k) {
        const double th = -kPi + (k + 0.5) * 2.0 * kPi / nodes;
        const double cot = 1.0 / std::tan(c2 * th);
        const double sn = std::sin(c2 * th);
        const Complex z = mu * Complex(c1 * th * cot - c3, c4 * th);
        const Complex dz = mu * Complex(c1 * cot - c1 * c2 * th / (sn * sn), c4);
        Complex F = transform(z);
        for (const Pole& p : poles_) {
            if (std::abs(z - p.u) < opt_.guard * std::max(1.0, std::abs(p.u))) {
                throw NumericalError(Method::laplace, t, "laplace: a pole lies on the inversion contour");
            }
            F -= p.residue / (z - p.u);
        }
        const Complex term = std::exp(z * t) * F * dz;
        sum += term;
        scale += std::abs(term);
    }
    scale /= nodes;
    return sum / (Complex(0.0, 1.0) * double(nodes));
}

GSample LaplaceInverter::continuum(double t) const {
    if (!(t > 0.0) || !std::isfinite(t)) throw ConfigError("laplace: t must be finite and > 0");
    double s1 = 0.0, s2 = 0.0;
    const Complex coarse = talbot(t, opt_.nodes, s1);
    const Complex fine = talbot(t, 2 * opt_.nodes, s2);
    Complex value = fine;
    for (int i = 0; i < int(poles_.size()); ++i) {
        if (i != bound_index_) value += poles_[i].residue * std::exp(poles_[i].u * t);
    }
    GSample s{t, value, 0.0, Method::laplace};
    s.error_bound = std::abs(fine - coarse) + 16.0 * std::numeric_limits<double>::epsilon() * (s1 + s2);
    if (s.error_bound > opt_.tol) {
        throw NumericalError(Method::laplace, t,
                             "laplace: contour doubling moved the result by " + std::to_string(s.error_bound));
    }
    return s;
}

GSample LaplaceInverter::operator()(double t) const {
    GSample s = continuum(t);
    s.value += bound_state(t);
    return s;
}

GSample laplace_invert(const ReservoirParams& params, double t, const LaplaceOptions& opt) {
    return LaplaceInverter(params, opt)(t);
}

}  // namespace edgedecay
