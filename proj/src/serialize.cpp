// serialize.cpp — JSON/CSV writers

#include "edgedecay/serialize.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace edgedecay {
namespace {

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

nlohmann::json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json to_json(const ReservoirConfig& cfg) {
    return {{"A", cfg.A()}, {"a", cfg.a()}, {"alpha", cfg.alpha()}, {"omega0", cfg.omega0()}};
}

nlohmann::json to_json(const ReservoirParams& p) {
    return {{"z0", complex_json(p.z0)},        {"z_alpha", complex_json(p.z_alpha)}, {"z1", p.z1},
            {"A_star", p.A_star},              {"tau", p.tau},                       {"Omega_alpha", p.Omega_alpha},
            {"M_alpha", p.M_alpha}};
}

nlohmann::json to_json(const RootSet& rs) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : rs.roots) {
        roots.push_back({{"zeta", complex_json(r.zeta)}, {"multiplicity", r.multiplicity}, {"residual", r.residual}});
    }
    return {{"degree", rs.degree},
            {"total_multiplicity", rs.total_multiplicity()},
            {"max_residual", rs.max_residual()},
            {"roots", roots}};
}

nlohmann::json to_json(const GSample& s) {
    return {{"t", s.t}, {"value", complex_json(s.value)}, {"error_bound", s.error_bound},
            {"method", std::string(to_string(s.method))}};
}

std::string samples_csv(const std::vector<GSample>& samples) {
    std::ostringstream os;
    os << "t,re_G,im_G,abs_G,error\n";
    for (const auto& s : samples) {
        os << num(s.t) << ',' << num(s.value.real()) << ',' << num(s.value.imag()) << ',' << num(std::abs(s.value))
           << ',' << num(s.error_bound) << '\n';
    }
    return os.str();
}

std::string trajectory_csv(const std::vector<TrajectoryPoint>& points) {
    std::ostringstream os;
    os << kTrajectoryHeader << '\n';
    for (const auto& p : points) {
        const Complex r10 = p.rho.rho10();
        os << num(p.t) << ',' << num(p.rho.rho11()) << ',' << num(r10.real()) << ',' << num(r10.imag()) << ','
           << num(std::abs(r10)) << ',' << to_string(p.g.method) << ',' << num(p.g.error_bound) << '\n';
    }
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace edgedecay
