// cli.cpp — verbs of the command-line tool

#include "edgedecay/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "edgedecay/asymptotics.hpp"
#include "edgedecay/serialize.hpp"

namespace edgedecay {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string join_path(const std::string& dir, const std::string& name) { return (fs::path(dir) / name).string(); }

std::string fmt(double x, const char* spec = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

TimeGrid::Spacing parse_scale(const std::string& s) {
    if (s == "log" || s == "logarithmic") return TimeGrid::Spacing::logarithmic;
    if (s == "uniform" || s == "linear") return TimeGrid::Spacing::uniform;
    throw ConfigError("config: scale must be 'log' or 'uniform', got '" + s + "'");
}

// Volterra marches from 0, so it gets the grid points the step cap allows.
double volterra_reach(const RoutingPolicy& p) { return p.volterra_max_steps * p.volterra_h / 2.0; }

std::vector<std::optional<GSample>> evaluate_tolerant(const GEvaluator& ev, Method m, const std::vector<double>& t,
                                                      json& failures) {
    std::vector<std::optional<GSample>> out(t.size());
    if (m == Method::volterra) {
        std::vector<double> reach;
        for (double x : t)
            if (x <= volterra_reach(ev.policy())) reach.push_back(x);
        if (reach.size() < t.size()) {
            failures.push_back({{"method", "volterra"}, {"t", t[reach.size()]}, {"message", "beyond marching cap"}});
        }
        if (reach.empty()) return out;
        try {
            const auto s = ev.on_grid(TimeGrid::from_points(reach), Method::volterra);
            for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i];
        } catch (const NumericalError& e) {
            failures.push_back({{"method", "volterra"}, {"t", e.t()}, {"message", e.what()}});
        }
        return out;
    }
    bool reported = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        try {
            out[i] = ev(t[i], m);
        } catch (const NumericalError& e) {
            // one record per method: the first failing t
            if (!reported) failures.push_back({{"method", to_string(m)}, {"t", e.t()}, {"message", e.what()}});
            reported = true;
        }
    }
    return out;
}

json comparison_json(const std::vector<PairComparison>& pairs, double tol, bool with_deviations) {
    json arr = json::array();
    for (const auto& p : pairs) {
        json row = {{"first", to_string(p.first)},
                    {"second", to_string(p.second)},
                    {"common_points", p.common_points},
                    {"max_abs_diff", p.max_abs_diff},
                    {"t_at_max", p.t_at_max},
                    {"tol", tol},
                    {"status", p.common_points == 0 ? "NO_OVERLAP" : (p.pass ? "PASS" : "FAIL")}};
        if (with_deviations) {
            json dev = json::array();
            for (const auto& [t, d] : p.deviations) dev.push_back({{"t", t}, {"abs_diff", d}});
            row["deviations"] = dev;
        }
        arr.push_back(row);
    }
    return arr;
}

void print_pairs(std::ostream& out, const std::vector<PairComparison>& pairs) {
    for (const auto& p : pairs) {
        out << "  " << to_string(p.first) << " vs " << to_string(p.second) << ": ";
        if (p.common_points == 0) {
            out << "NO_OVERLAP\n";
            continue;
        }
        out << "max|dG| = " << fmt(p.max_abs_diff, "%.3e") << " at t = " << fmt(p.t_at_max) << " over "
            << p.common_points << " points  " << (p.pass ? "PASS" : "FAIL") << '\n';
    }
}

json negative_control_json(const NegativeControl& nc) {
    return {{"comparison", "asymptotic vs laplace"},
            {"t", nc.t},
            {"relative_deviation", nc.relative_deviation},
            {"gate", nc.gate},
            {"outcome", nc.passes_gate ? "PASS" : "FAIL"},
            {"expected", "FAIL"},
            {"as_expected", !nc.passes_gate}};
}

int report_numerical(std::ostream& err, const NumericalError& e) {
    err << "numerical failure: method " << to_string(e.method()) << " at t = " << fmt(e.t(), "%.17g") << ": "
        << e.what() << '\n';
    return 2;
}

}  // namespace

TimeGrid GridSpec::build(double tau) const {
    const double t1 = end(tau);
    if (scale == TimeGrid::Spacing::logarithmic) return TimeGrid::logarithmic(t_min, t1, points);
    return TimeGrid::uniform(t_min, t1, points);
}

RunSpec run_spec_from_config(const ConfigText& c) {
    for (const char* key : {"A", "a", "alpha", "omega0"}) {
        if (!c.has(key)) throw ConfigError(std::string("config: missing required key '") + key + "'");
    }
    RunSpec s;
    s.reservoir = ReservoirConfig(c.number("A"), c.number("a"), c.number("alpha"), c.number("omega0"));

    if (c.has("methods")) {
        s.methods.clear();
        for (const auto& name : c.list("methods")) s.methods.push_back(method_from_string(name));
        if (s.methods.empty()) throw ConfigError("config: methods must name at least one method");
        for (std::size_t i = 0; i < s.methods.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (s.methods[i] == s.methods[j])
                    throw ConfigError("config: method '" + std::string(to_string(s.methods[i])) + "' listed twice");
    }

    s.grid.t_min = c.number_or("t_min", s.grid.t_min);
    if (c.has("t_max") && c.has("t_max_tau")) throw ConfigError("config: give t_max or t_max_tau, not both");
    if (c.has("t_max")) s.grid.t_max = c.number("t_max");
    if (c.has("t_max_tau")) s.grid.t_max = c.number("t_max_tau") * derive_params(s.reservoir).tau;
    s.grid.points = c.integer_or("points", s.grid.points);
    if (auto sc = c.get("scale")) s.grid.scale = parse_scale(*sc);
    if (s.grid.points < 1) throw ConfigError("config: points must be >= 1");
    if (!(s.grid.t_min >= 0.0)) throw ConfigError("config: t_min must be >= 0");
    if (s.grid.scale == TimeGrid::Spacing::logarithmic && !(s.grid.t_min > 0.0))
        throw ConfigError("config: a log grid needs t_min > 0");
    if (s.grid.t_max && !(*s.grid.t_max >= s.grid.t_min)) throw ConfigError("config: t_max must be >= t_min");

    s.initial = DensityMatrix(c.number_or("rho11_0", 0.5),
                              Complex(c.number_or("re_rho10_0", 0.5), c.number_or("im_rho10_0", 0.0)));

    s.tol = c.number_or("tol", s.tol);
    if (!(s.tol > 0.0)) throw ConfigError("config: tol must be > 0");
    if (auto o = c.get("out")) s.out_dir = *o;
    s.workers = c.integer_or("workers", s.workers);
    if (s.workers < 1) throw ConfigError("config: workers must be >= 1");

    s.policy.series_tol = c.number_or("series_tol", s.policy.series_tol);
    s.policy.laplace_tol = c.number_or("laplace_tol", s.policy.laplace_tol);
    s.policy.volterra_tol = c.number_or("volterra_tol", s.policy.volterra_tol);
    s.policy.volterra_max_steps = c.integer_or("volterra_max_steps", s.policy.volterra_max_steps);
    s.policy.asymptotic_shells = c.integer_or("asymptotic_shells", s.policy.asymptotic_shells);

    if (c.has("alphas")) s.alphas = c.number_list("alphas");
    if (c.has("A_values")) s.A_values = c.number_list("A_values");
    s.fit_lo_tau = c.number_or("fit_lo_tau", s.fit_lo_tau);
    s.fit_hi_tau = c.number_or("fit_hi_tau", s.fit_hi_tau);
    s.fit_points = c.integer_or("fit_points", s.fit_points);
    if (!(s.fit_lo_tau > 0.0 && s.fit_hi_tau > s.fit_lo_tau)) throw ConfigError("config: need 0 < fit_lo_tau < fit_hi_tau");
    if (s.fit_points < 8) throw ConfigError("config: fit_points must be >= 8");
    return s;
}

json describe(const GEvaluator& ev) {
    const ReservoirParams& p = ev.params();
    const ReservoirConfig& cfg = p.cfg;
    const Complex d = d_alpha(p);
    const auto [pop, coh] = tail_exponent_prediction(cfg);

    json j;
    j["schema_version"] = kManifestSchema;
    j["reservoir"] = to_json(cfg);
    j["derived"] = to_json(p);
    j["d_alpha"] = {{"value", complex_json(d)}, {"abs", std::abs(d)}};
    j["tail_powers"] = {{"population", pop}, {"coherence", coh}};

    const LaplaceInverter& lap = ev.laplace();
    json poles = json::array();
    for (const Pole& q : lap.poles()) poles.push_back({{"u", complex_json(q.u)}, {"residue", complex_json(q.residue)}});
    j["poles"] = poles;
    j["zero_count"] = lap.zero_count();
    if (auto b = lap.bound_pole()) {
        j["bound_state"] = {{"frequency", b->u.imag()}, {"residue", complex_json(b->residue)},
                            {"weight", std::abs(b->residue)}};
    } else {
        j["bound_state"] = nullptr;
    }
    j["series_window"] = {{"t_max", ev.series_limit()}, {"tol", ev.policy().series_tol}};

    const Complex z0_typeset = printed_z0(cfg);
    j["typeset_audit"] = {
        {"z0", complex_json(z0_typeset)},
        {"tau", crossover_time(z0_typeset, p.z_alpha, p.z1, cfg.alpha())},
        {"d_alpha", complex_json(printed_d_alpha(cfg))},
        {"peak_location", printed_peak_location(cfg)},
    };

    if (const RationalPath* r = ev.rational()) {
        json removable = json::array();
        for (bool b : r->table().removable) removable.push_back(b);
        j["rational"] = {{"p", r->order().p},
                         {"q", r->order().q},
                         {"root_set", to_json(r->roots())},
                         {"removable", removable},
                         {"principal_roots", r->principal_roots()}};
    } else {
        j["rational"] = nullptr;
    }
    return j;
}

std::vector<PairComparison> compare_methods(const std::vector<Method>& methods,
                                            const std::vector<std::vector<std::optional<GSample>>>& values,
                                            const std::vector<double>& t, double tol) {
    std::vector<PairComparison> out;
    for (std::size_t i = 0; i < methods.size(); ++i) {
        for (std::size_t j = i + 1; j < methods.size(); ++j) {
            PairComparison pc;
            pc.first = methods[i];
            pc.second = methods[j];
            for (std::size_t k = 0; k < t.size(); ++k) {
                if (!values[i][k] || !values[j][k]) continue;
                const double d = std::abs(values[i][k]->value - values[j][k]->value);
                pc.deviations.emplace_back(t[k], d);
                ++pc.common_points;
                if (d > pc.max_abs_diff || pc.common_points == 1) {
                    pc.max_abs_diff = d;
                    pc.t_at_max = t[k];
                }
            }
            pc.pass = pc.common_points > 0 && pc.max_abs_diff <= tol;
            out.push_back(std::move(pc));
        }
    }
    return out;
}

NegativeControl asymptotic_negative_control(const GEvaluator& ev) {
    NegativeControl nc;
    nc.t = 0.1 * ev.params().tau;
    const Complex ref = ev(nc.t, Method::laplace).value;
    const Complex approx = ev(nc.t, Method::asymptotic).value;
    nc.relative_deviation = std::abs(approx - ref) / std::abs(ref);
    nc.passes_gate = nc.relative_deviation <= nc.gate;
    return nc;
}

SweepRow sweep_entry(const ReservoirConfig& cfg, const RunSpec& spec) {
    SweepRow row;
    row.alpha = cfg.alpha();
    row.A = cfg.A();
    row.predicted = -(1.0 + cfg.alpha());
    try {
        const ReservoirParams p = derive_params(cfg);
        row.tau = p.tau;
        row.d_alpha_abs = std::abs(d_alpha(p));
        LaplaceOptions lopt;
        lopt.tol = spec.policy.laplace_tol;
        const LaplaceInverter lap(p, lopt);
        if (auto b = lap.bound_pole()) row.bound_weight = std::abs(b->residue);

        const TimeGrid grid = TimeGrid::logarithmic(spec.fit_lo_tau * p.tau, spec.fit_hi_tau * p.tau, spec.fit_points);
        std::vector<std::pair<double, double>> total, cont;
        for (double t : grid.points) {
            total.emplace_back(t, std::abs(lap(t).value));
            cont.emplace_back(t, std::abs(lap.continuum(t).value));
        }
        const TailFit ft = fit_power_law(total);
        const TailFit fc = fit_tail_exponent(cont);
        row.fitted_exponent = ft.exponent;
        row.deviation = ft.exponent - row.predicted;
        row.continuum_exponent = fc.exponent;
        row.continuum_deviation = fc.exponent - row.predicted;
        row.continuum_amplitude = fc.amplitude;
        row.fit_residual = fc.residual;
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int run_command(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        const GEvaluator ev(derive_params(spec.reservoir), spec.policy);
        const TimeGrid grid = spec.grid.build(ev.params().tau);

        json manifest = describe(ev);
        manifest["grid"] = {{"t_min", grid.points.front()},
                            {"t_max", grid.points.back()},
                            {"points", grid.points.size()},
                            {"scale", spec.grid.scale == TimeGrid::Spacing::logarithmic ? "log" : "uniform"}};
        manifest["initial_state"] = {{"rho11", spec.initial.rho11()}, {"rho10", complex_json(spec.initial.rho10())}};
        manifest["trajectory_columns"] = kTrajectoryHeader;

        json files = json::array();
        json failures = json::array();
        std::vector<std::vector<std::optional<GSample>>> values;
        for (Method m : spec.methods) {
            std::vector<std::optional<GSample>> col(grid.points.size());
            try {
                const auto traj = trajectory(spec.initial, grid, ev, spec.reservoir, m);
                const std::string name = "trajectory_" + std::string(to_string(m)) + ".csv";
                write_file_atomic(join_path(spec.out_dir, name), trajectory_csv(traj));
                files.push_back(name);
                for (std::size_t k = 0; k < traj.size(); ++k) col[k] = traj[k].g;
                out << to_string(m) << ": " << traj.size() << " points -> " << name << '\n';
            } catch (const NumericalError& e) {
                failures.push_back({{"method", to_string(e.method())}, {"t", e.t()}, {"message", e.what()}});
                report_numerical(err, e);
            }
            values.push_back(std::move(col));
        }
        manifest["methods"] = json::array();
        for (Method m : spec.methods) manifest["methods"].push_back(to_string(m));
        manifest["files"] = files;
        manifest["failures"] = failures;
        if (spec.methods.size() >= 2) {
            const auto pairs = compare_methods(spec.methods, values, grid.points, spec.tol);
            manifest["comparison"] = comparison_json(pairs, spec.tol, false);
            out << "comparison (tol " << fmt(spec.tol, "%.1e") << "):\n";
            print_pairs(out, pairs);
        }
        write_file_atomic(join_path(spec.out_dir, "manifest.json"), manifest.dump(2) + "\n");
        out << "manifest -> " << join_path(spec.out_dir, "manifest.json") << '\n';
        return failures.empty() ? 0 : 2;
    } catch (const NumericalError& e) {
        return report_numerical(err, e);
    }
}

int compare_command(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    if (spec.methods.size() < 2) {
        err << "config error: compare needs at least two methods\n";
        return 1;
    }
    try {
        const GEvaluator ev(derive_params(spec.reservoir), spec.policy);
        const TimeGrid grid = spec.grid.build(ev.params().tau);
        json failures = json::array();
        std::vector<std::vector<std::optional<GSample>>> values;
        for (Method m : spec.methods) values.push_back(evaluate_tolerant(ev, m, grid.points, failures));

        const auto pairs = compare_methods(spec.methods, values, grid.points, spec.tol);
        const NegativeControl nc = asymptotic_negative_control(ev);

        json report;
        report["schema_version"] = kManifestSchema;
        report["reservoir"] = to_json(spec.reservoir);
        report["tau"] = ev.params().tau;
        report["series_window"] = ev.series_limit();
        report["pairs"] = comparison_json(pairs, spec.tol, true);
        report["unavailable"] = failures;
        report["negative_control"] = negative_control_json(nc);
        write_file_atomic(join_path(spec.out_dir, "compare.json"), report.dump(2) + "\n");

        for (std::size_t i = 0; i < spec.methods.size(); ++i) {
            std::vector<GSample> ok;
            for (const auto& v : values[i])
                if (v) ok.push_back(*v);
            write_file_atomic(join_path(spec.out_dir, "g_" + std::string(to_string(spec.methods[i])) + ".csv"),
                              samples_csv(ok));
        }
        out << "pairwise agreement (tol " << fmt(spec.tol, "%.1e") << "):\n";
        print_pairs(out, pairs);
        out << "negative control: asymptotic vs laplace at t = 0.1 tau = " << fmt(nc.t) << ": rel. deviation "
            << fmt(nc.relative_deviation, "%.3f") << (nc.passes_gate ? " PASS" : " FAIL") << " (expected FAIL)\n";
        out << "report -> " << join_path(spec.out_dir, "compare.json") << '\n';
        return 0;
    } catch (const NumericalError& e) {
        return report_numerical(err, e);
    }
}

int sweep_command(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const std::vector<double> alphas = spec.alphas.empty() ? std::vector<double>{spec.reservoir.alpha()} : spec.alphas;
    const std::vector<double> As = spec.A_values.empty() ? std::vector<double>{spec.reservoir.A()} : spec.A_values;

    struct Entry {
        double alpha, A;
    };
    std::vector<Entry> entries;
    for (double al : alphas)
        for (double A : As) entries.push_back({al, A});
    std::vector<SweepRow> rows(entries.size());

    const auto entry_json = [](const SweepRow& r) {
        return json{{"alpha", r.alpha},
                    {"A", r.A},
                    {"tau", r.tau},
                    {"fitted_exponent", r.fitted_exponent},
                    {"predicted", r.predicted},
                    {"deviation", r.deviation},
                    {"continuum_exponent", r.continuum_exponent},
                    {"continuum_deviation", r.continuum_deviation},
                    {"continuum_amplitude", r.continuum_amplitude},
                    {"d_alpha_abs", r.d_alpha_abs},
                    {"bound_weight", r.bound_weight},
                    {"fit_residual", r.fit_residual},
                    {"error", r.error.empty() ? json(nullptr) : json(r.error)}};
    };

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            SweepRow row;
            try {
                const ReservoirConfig cfg(entries[i].A, spec.reservoir.a(), entries[i].alpha, spec.reservoir.omega0());
                row = sweep_entry(cfg, spec);
            } catch (const std::exception& e) {
                row.alpha = entries[i].alpha;
                row.A = entries[i].A;
                row.predicted = -(1.0 + entries[i].alpha);
                row.error = e.what();
            }
            char name[32];
            std::snprintf(name, sizeof name, "entry_%04zu.json", i);
            write_file_atomic(join_path(join_path(spec.out_dir, "sweep"), name), entry_json(row).dump(2) + "\n");
            rows[i] = std::move(row);
        }
    };
    const int nthreads = std::max(1, std::min<int>(spec.workers, static_cast<int>(entries.size())));
    std::vector<std::thread> pool;
    for (int k = 1; k < nthreads; ++k) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::ostringstream csv;
    csv << "alpha,A,tau,fitted_exponent,predicted,deviation,continuum_exponent,continuum_deviation,"
           "continuum_amplitude,d_alpha_abs,bound_weight,error\n";
    json all = json::array();
    int failed = 0;
    for (const auto& r : rows) {
        const auto g = [](double x) { return fmt(x, "%.17g"); };
        std::string e = r.error;
        std::replace(e.begin(), e.end(), ',', ';');
        std::replace(e.begin(), e.end(), '\n', ' ');
        csv << g(r.alpha) << ',' << g(r.A) << ',' << g(r.tau) << ',' << g(r.fitted_exponent) << ','
            << g(r.predicted) << ',' << g(r.deviation) << ',' << g(r.continuum_exponent) << ','
            << g(r.continuum_deviation) << ',' << g(r.continuum_amplitude) << ',' << g(r.d_alpha_abs) << ','
            << g(r.bound_weight) << ',' << e << '\n';
        all.push_back(entry_json(r));
        if (!r.error.empty()) {
            ++failed;
            err << "sweep entry alpha=" << r.alpha << " A=" << r.A << " failed: " << r.error << '\n';
        } else {
            out << "alpha=" << fmt(r.alpha) << " A=" << fmt(r.A) << " tau=" << fmt(r.tau)
                << " slope(|G|)=" << fmt(r.fitted_exponent, "%.4f") << " slope(continuum)="
                << fmt(r.continuum_exponent, "%.4f") << " predicted=" << fmt(r.predicted, "%.4f") << '\n';
        }
    }
    write_file_atomic(join_path(spec.out_dir, "sweep.csv"), csv.str());
    json summary = {{"schema_version", kManifestSchema},
                    {"fit_window_tau", {spec.fit_lo_tau, spec.fit_hi_tau}},
                    {"fit_points", spec.fit_points},
                    {"rows", all}};
    write_file_atomic(join_path(spec.out_dir, "sweep.json"), summary.dump(2) + "\n");
    out << "sweep -> " << join_path(spec.out_dir, "sweep.csv") << '\n';
    return failed == static_cast<int>(rows.size()) ? 2 : 0;
}

int validate_command(const RunSpec& spec, std::ostream& out, std::ostream& err) {
    const SummabilityReport s = validate_spectral_density(spec.reservoir);
    json report = {{"schema_version", kManifestSchema},
                   {"reservoir", to_json(spec.reservoir)},
                   {"spectral_density",
                    {{"nonnegative", s.nonnegative},
                     {"summable", s.summable},
                     {"integral", s.integral},
                     {"closed_form", s.closed_form},
                     {"quadrature_error", s.quadrature_error},
                     {"min_sampled", s.min_sampled}}}};
    int code = (s.nonnegative && s.summable) ? 0 : 2;
    try {
        const GEvaluator ev(derive_params(spec.reservoir), spec.policy);
        report["parameters"] = describe(ev);
    } catch (const NumericalError& e) {
        report["parameters"] = {{"error", e.what()}, {"method", to_string(e.method())}, {"t", e.t()}};
        report_numerical(err, e);
        code = 2;
    }
    write_file_atomic(join_path(spec.out_dir, "validate.json"), report.dump(2) + "\n");
    out << "spectral density: " << (s.nonnegative ? "nonnegative" : "NEGATIVE") << ", "
        << (s.summable ? "summable" : "NOT summable") << " (integral " << fmt(s.integral, "%.12g") << " vs "
        << fmt(s.closed_form, "%.12g") << ")\n";
    out << "report -> " << join_path(spec.out_dir, "validate.json") << '\n';
    return code;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact decoherence dynamics of a qubit in a band-gap reservoir", "edgedecay"};
    app.require_subcommand(1);
    std::string config_path;
    std::optional<std::string> out_dir;
    std::optional<double> tol;
    std::optional<int> workers;
    const std::pair<const char*, const char*> verbs[] = {
        {"run", "trajectories per method and a manifest"},
        {"compare", "pairwise method agreement and the negative control"},
        {"sweep", "tail exponents over alpha and A lists"},
        {"validate", "check the spectral density and derived constants"},
    };
    for (const auto& [name, help] : verbs) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", config_path, "key=value or JSON config file")->required();
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--tol", tol, "comparison tolerance");
        sub->add_option("--workers", workers, "sweep worker threads");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    RunSpec spec;
    try {
        ConfigText cfg = ConfigText::from_file(config_path);
        if (out_dir) cfg.set("out", *out_dir);
        if (tol) cfg.set("tol", fmt(*tol, "%.17g"));
        if (workers) cfg.set("workers", std::to_string(*workers));
        spec = run_spec_from_config(cfg);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        if (verb == "run") return run_command(spec, out, err);
        if (verb == "compare") return compare_command(spec, out, err);
        if (verb == "sweep") return sweep_command(spec, out, err);
        return validate_command(spec, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace edgedecay
