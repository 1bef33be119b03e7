#pragma once

// Parameter-grid sweeps over coupling strengths, CSV surface emission and
// figure presets. All frequencies are in units of w_a (w_a = 1 internally).

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "asrm/entanglement.hpp"
#include "asrm/exact.hpp"
#include "asrm/transform.hpp"

namespace asrm {

enum class Model { single, two };

enum class SurfaceKind {
    energy_exact,
    energy_transformed,
    energy_deviation,
    fidelity,
    entropy,
    negativity_exact,
    negativity_transformed,
    negativity_deviation,
};

inline const std::vector<std::pair<std::string, SurfaceKind>>& surface_kind_names() {
    static const std::vector<std::pair<std::string, SurfaceKind>> names = {
        {"energy_exact", SurfaceKind::energy_exact},
        {"energy_transformed", SurfaceKind::energy_transformed},
        {"energy_deviation", SurfaceKind::energy_deviation},
        {"fidelity", SurfaceKind::fidelity},
        {"entropy", SurfaceKind::entropy},
        {"negativity_exact", SurfaceKind::negativity_exact},
        {"negativity_transformed", SurfaceKind::negativity_transformed},
        {"negativity_deviation", SurfaceKind::negativity_deviation},
    };
    return names;
}

inline std::string to_string(SurfaceKind k) {
    for (const auto& [name, kind] : surface_kind_names())
        if (kind == k) return name;
    throw Error("unknown surface kind");
}

inline SurfaceKind surface_kind_from_string(const std::string& s) {
    for (const auto& [name, kind] : surface_kind_names())
        if (name == s) return kind;
    throw ConfigInvalid("unknown surface kind: " + s);
}

struct GridAxis {
    double min = 0.0;
    double max = 0.5;
    int steps = 21;

    double at(int i) const { return min + (max - min) * double(i) / double(steps - 1); }
};

struct SweepConfig {
    Model model = Model::single;
    double w_b_over_w_a = 1.0;
    GridAxis coupling1;
    GridAxis coupling2;
    double tol = 1e-8;
    int n_cap = 200;
    std::vector<SurfaceKind> outputs;

    void validate() const {
        if (coupling1.steps < 2 || coupling2.steps < 2)
            throw ConfigInvalid("grid steps must be >= 2");
        if (coupling1.min < 0 || coupling2.min < 0) throw ConfigInvalid("grid min must be >= 0");
        if (coupling1.max > 2.0 || coupling2.max > 2.0)
            throw ConfigInvalid("grid max must be <= 2.0 (units of w_a)");
        if (coupling1.max < coupling1.min || coupling2.max < coupling2.min)
            throw ConfigInvalid("grid max must be >= min");
        if (tol <= 0) throw ConfigInvalid("tol must be > 0");
        if (n_cap < 8) throw ConfigInvalid("n_cap must be >= 8");
        if (w_b_over_w_a <= 0) throw ConfigInvalid("w_b_over_w_a must be > 0");
        if (outputs.empty()) throw ConfigInvalid("at least one output surface required");
        if (model == Model::single)
            for (SurfaceKind k : outputs)
                if (k == SurfaceKind::negativity_exact || k == SurfaceKind::negativity_transformed ||
                    k == SurfaceKind::negativity_deviation)
                    throw ConfigInvalid("negativity surfaces require the two-qubit model");
    }
};

enum class PointStatus { ok, degenerate, no_convergence, root_failed };

inline std::string to_string(PointStatus s) {
    switch (s) {
        case PointStatus::ok: return "ok";
        case PointStatus::degenerate: return "degenerate";
        case PointStatus::no_convergence: return "no_convergence";
        case PointStatus::root_failed: return "root_failed";
    }
    return "?";
}

struct SurfaceRecord {
    double coupling1;
    double coupling2;
    std::optional<double> value;
    PointStatus status;
};

/// Everything computed at one grid point. Exact-solver failures and
/// transformation-method failures are tracked separately so that surfaces that
/// only need one side still emit values.
struct PointDiagnostics {
    PointStatus exact_status = PointStatus::ok;
    PointStatus transform_status = PointStatus::ok;
    std::optional<double> energy_exact;
    std::optional<double> energy_transformed;
    std::optional<double> fidelity;
    std::optional<double> entropy;
    std::optional<double> negativity_exact;
    std::optional<double> negativity_transformed;
    std::optional<double> xi;
    std::optional<int> n_max_used;
    std::optional<double> energy_convergence;
};

namespace detail {

inline int fock_cutoff_for(double alpha, int at_least) {
    int n = std::max(at_least, 8);
    while (coherent_tail_bound(alpha, n) >= 1e-12 && n < 400) ++n;
    return n;
}

inline PointStatus status_of(const Error& e) {
    if (dynamic_cast<const DegenerateGround*>(&e)) return PointStatus::degenerate;
    if (dynamic_cast<const NoConvergence*>(&e)) return PointStatus::no_convergence;
    return PointStatus::root_failed;
}

}  // namespace detail

/// Evaluate one parameter point of the sweep. `need_fidelity` selects the
/// rotated frame for the two-qubit exact solve so states are comparable with
/// the ansatz; energies and entanglement do not depend on the frame.
inline PointDiagnostics evaluate_point(Model model, double wb, double c1, double c2,
                                       double tol, int n_cap, bool need_fidelity,
                                       bool need_transform, bool need_entanglement) {
    PointDiagnostics out;
    ConvergenceSettings cs;
    cs.tol = tol;
    cs.n_cap = n_cap;

    if (model == Model::single) {
        SingleQubitParams p(1.0, wb, c1, c2);
        std::optional<GroundStateSolution> sol;
        try {
            sol = converged_ground_state(p, cs);
            out.energy_exact = sol->energy;
            out.n_max_used = sol->n_max_used;
            out.energy_convergence = sol->energy_convergence;
            if (need_entanglement) {
                DensityMatrix rho =
                    reduced_density(sol->state, Subsystem::spin, 2, sol->n_max_used + 1);
                out.entropy = von_neumann_entropy(rho);
            }
        } catch (const Error& e) {
            out.exact_status = detail::status_of(e);
        }
        if (need_transform) {
            try {
                CoherentAmplitude xi = solve_xi1(p);
                out.xi = xi.alpha;
                out.energy_transformed = energy_g1(p, xi);
                if (need_fidelity && sol) {
                    int n = detail::fock_cutoff_for(xi.alpha, sol->n_max_used);
                    Eigen::VectorXcd exact_state = sol->state;
                    if (n != sol->n_max_used)
                        exact_state = ground_state(build_single_qubit(p, FockSpace(n))).second;
                    TransformedAnsatz ansatz = ansatz_single(p, FockSpace(n));
                    out.fidelity = asrm::fidelity(ansatz.ansatz_state, exact_state);
                }
            } catch (const Error& e) {
                out.transform_status = detail::status_of(e);
            }
        }
    } else {
        TwoQubitParams p(1.0, wb, c1, c2);
        Frame frame = need_fidelity ? Frame::rotated : Frame::original;
        std::optional<GroundStateSolution> sol;
        try {
            sol = converged_ground_state(p, frame, cs);
            out.energy_exact = sol->energy;
            out.n_max_used = sol->n_max_used;
            out.energy_convergence = sol->energy_convergence;
            if (need_entanglement) {
                int d = sol->n_max_used + 1;
                Eigen::VectorXcd full = triplet_to_two_qubit(sol->state, d);
                DensityMatrix rho = reduced_density(full, Subsystem::spin, 4, d);
                out.entropy = von_neumann_entropy(rho);
                out.negativity_exact = negativity(rho);
            }
        } catch (const Error& e) {
            out.exact_status = detail::status_of(e);
        }
        if (need_transform) {
            try {
                CoherentAmplitude xi = solve_xi2(p);
                out.xi = xi.alpha;
                ThreeLevelEigensystem sys = three_level_eigensystem(p, xi);
                out.energy_transformed = sys.nu[0];
                out.negativity_transformed = negativity_closed_form(xi, -sys.nu[2] / sys.B);
                if (need_fidelity && sol) {
                    int n = detail::fock_cutoff_for(xi.alpha, sol->n_max_used);
                    Eigen::VectorXcd exact_state = sol->state;
                    if (n != sol->n_max_used)
                        exact_state =
                            ground_state(build_two_qubit_rotated(p, FockSpace(n))).second;
                    TransformedAnsatz ansatz = ansatz_two_qubit(p, FockSpace(n));
                    out.fidelity = asrm::fidelity(ansatz.ansatz_state, exact_state);
                }
            } catch (const Error& e) {
                out.transform_status = detail::status_of(e);
            }
        }
    }
    return out;
}

namespace detail {

inline PointStatus worse(PointStatus a, PointStatus b) {
    return a == PointStatus::ok ? b : a;
}

inline SurfaceRecord surface_record(const PointDiagnostics& d, SurfaceKind k, double c1,
                                    double c2) {
    auto rec = [&](std::optional<double> v, PointStatus s) -> SurfaceRecord {
        if (s != PointStatus::ok || !v) return {c1, c2, std::nullopt, worse(s, PointStatus::root_failed)};
        return {c1, c2, v, PointStatus::ok};
    };
    auto diff = [&](std::optional<double> a, std::optional<double> b,
                    PointStatus s) -> SurfaceRecord {
        if (s != PointStatus::ok || !a || !b)
            return {c1, c2, std::nullopt, worse(s, PointStatus::root_failed)};
        return {c1, c2, *a - *b, PointStatus::ok};
    };
    switch (k) {
        case SurfaceKind::energy_exact: return rec(d.energy_exact, d.exact_status);
        case SurfaceKind::entropy: return rec(d.entropy, d.exact_status);
        case SurfaceKind::negativity_exact: return rec(d.negativity_exact, d.exact_status);
        case SurfaceKind::energy_transformed:
            return rec(d.energy_transformed, d.transform_status);
        case SurfaceKind::negativity_transformed:
            return rec(d.negativity_transformed, d.transform_status);
        case SurfaceKind::fidelity:
            return rec(d.fidelity, worse(d.exact_status, d.transform_status));
        case SurfaceKind::energy_deviation:
            return diff(d.energy_transformed, d.energy_exact,
                        worse(d.exact_status, d.transform_status));
        case SurfaceKind::negativity_deviation:
            return diff(d.negativity_exact, d.negativity_transformed,
                        worse(d.exact_status, d.transform_status));
    }
    throw Error("unknown surface kind");
}

inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace detail

struct SweepResult {
    std::vector<std::string> files;
    int non_ok_records = 0;
};

/// Run a sweep and write one CSV per requested surface plus a summary report.
/// Per-point failures degrade to status flags; the sweep never aborts.
inline SweepResult run_sweep(const SweepConfig& cfg, const std::filesystem::path& out_dir) {
    cfg.validate();
    std::filesystem::create_directories(out_dir);

    bool need_fidelity = false, need_transform = false, need_entanglement = false;
    for (SurfaceKind k : cfg.outputs) {
        switch (k) {
            case SurfaceKind::fidelity:
                need_fidelity = need_transform = true;
                break;
            case SurfaceKind::energy_transformed:
            case SurfaceKind::energy_deviation:
                need_transform = true;
                break;
            case SurfaceKind::negativity_transformed:
                need_transform = true;
                break;
            case SurfaceKind::negativity_deviation:
                need_transform = need_entanglement = true;
                break;
            case SurfaceKind::entropy:
            case SurfaceKind::negativity_exact:
                need_entanglement = true;
                break;
            default:
                break;
        }
    }

    const int n1 = cfg.coupling1.steps, n2 = cfg.coupling2.steps;
    std::vector<PointDiagnostics> grid(size_t(n1) * n2);
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(dynamic)
#endif
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j)
            grid[size_t(i) * n2 + j] =
                evaluate_point(cfg.model, cfg.w_b_over_w_a, cfg.coupling1.at(i),
                               cfg.coupling2.at(j), cfg.tol, cfg.n_cap, need_fidelity,
                               need_transform, need_entanglement);

    SweepResult result;
    std::ostringstream summary;
    summary << "model = " << (cfg.model == Model::single ? "single" : "two") << "\n";
    summary << "w_b_over_w_a = " << detail::format_value(cfg.w_b_over_w_a) << "\n";
    summary << "grid = " << n1 << "x" << n2 << "\n";

    int max_n = 0;
    for (const auto& d : grid)
        if (d.n_max_used) max_n = std::max(max_n, *d.n_max_used);
    summary << "max_n_max_used = " << max_n << "\n";

    for (SurfaceKind k : cfg.outputs) {
        std::filesystem::path file = out_dir / (to_string(k) + ".csv");
        std::ofstream os(file, std::ios::binary);
        os << "coupling1,coupling2,value,status\n";
        double vmin = 0, vmax = 0, arg1 = 0, arg2 = 0;
        bool have = false;
        int non_ok = 0;
        for (int i = 0; i < n1; ++i) {
            for (int j = 0; j < n2; ++j) {
                double c1 = cfg.coupling1.at(i), c2 = cfg.coupling2.at(j);
                SurfaceRecord r = detail::surface_record(grid[size_t(i) * n2 + j], k, c1, c2);
                os << detail::format_value(c1) << ',' << detail::format_value(c2) << ',';
                if (r.value) os << detail::format_value(*r.value);
                os << ',' << to_string(r.status) << '\n';
                if (r.value) {
                    if (!have || *r.value > vmax) {
                        vmax = *r.value;
                        arg1 = c1;
                        arg2 = c2;
                    }
                    if (!have || *r.value < vmin) vmin = *r.value;
                    have = true;
                } else {
                    ++non_ok;
                }
            }
        }
        result.non_ok_records += non_ok;
        result.files.push_back(file.string());
        summary << to_string(k) << ".min = " << (have ? detail::format_value(vmin) : "") << "\n";
        summary << to_string(k) << ".max = " << (have ? detail::format_value(vmax) : "") << "\n";
        summary << to_string(k) << ".argmax = " << detail::format_value(arg1) << ","
                << detail::format_value(arg2) << "\n";
        summary << to_string(k) << ".non_ok = " << non_ok << "\n";
    }

    std::ofstream os(out_dir / "summary.txt", std::ios::binary);
    os << summary.str();
    result.files.push_back((out_dir / "summary.txt").string());
    return result;
}

/// Parse the flat key-value sweep configuration format. Unknown keys are errors.
inline SweepConfig parse_config(std::istream& in) {
    SweepConfig cfg;
    cfg.outputs.clear();
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            s.erase(0, s.find_first_not_of(" \t\r"));
            auto e = s.find_last_not_of(" \t\r");
            s.erase(e == std::string::npos ? 0 : e + 1);
            return s;
        };
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigInvalid("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        try {
            if (key == "model") {
                if (val == "single")
                    cfg.model = Model::single;
                else if (val == "two")
                    cfg.model = Model::two;
                else
                    throw ConfigInvalid("model must be 'single' or 'two'");
            } else if (key == "w_b_over_w_a")
                cfg.w_b_over_w_a = std::stod(val);
            else if (key == "coupling1_min")
                cfg.coupling1.min = std::stod(val);
            else if (key == "coupling1_max")
                cfg.coupling1.max = std::stod(val);
            else if (key == "coupling1_steps")
                cfg.coupling1.steps = std::stoi(val);
            else if (key == "coupling2_min")
                cfg.coupling2.min = std::stod(val);
            else if (key == "coupling2_max")
                cfg.coupling2.max = std::stod(val);
            else if (key == "coupling2_steps")
                cfg.coupling2.steps = std::stoi(val);
            else if (key == "tol")
                cfg.tol = std::stod(val);
            else if (key == "n_cap")
                cfg.n_cap = std::stoi(val);
            else if (key == "outputs") {
                std::stringstream ss(val);
                std::string item;
                while (std::getline(ss, item, ','))
                    cfg.outputs.push_back(surface_kind_from_string(trim(item)));
            } else
                throw ConfigInvalid("unknown key: " + key);
        } catch (const std::invalid_argument&) {
            throw ConfigInvalid("line " + std::to_string(lineno) + ": bad value for " + key);
        }
    }
    cfg.validate();
    return cfg;
}

struct PresetRun {
    std::string label;  // subdirectory name, e.g. "wb_1.0"
    SweepConfig config;
};

/// Grid/detuning/output presets for the data behind the published surfaces.
/// Axes are couplings 0..1.5 w_a on a 61x61 grid unless narrowed here.
inline std::vector<PresetRun> figure_preset(const std::string& name, int steps = 61) {
    if (steps < 2) throw ConfigInvalid("preset steps must be >= 2");
    auto base = [&](Model m, std::vector<SurfaceKind> outs) {
        SweepConfig c;
        c.model = m;
        c.coupling1 = {0.0, 1.5, steps};
        c.coupling2 = {0.0, 1.5, steps};
        c.outputs = std::move(outs);
        return c;
    };
    auto detuned = [&](SweepConfig c) {
        std::vector<PresetRun> runs;
        for (double wb : {0.8, 1.0, 1.2}) {
            c.w_b_over_w_a = wb;
            std::ostringstream label;
            label << "wb_" << wb;
            runs.push_back({label.str(), c});
        }
        return runs;
    };

    using K = SurfaceKind;
    if (name == "fig1")
        return detuned(base(Model::single,
                            {K::energy_exact, K::energy_transformed, K::energy_deviation}));
    if (name == "fig2") return detuned(base(Model::single, {K::fidelity}));
    if (name == "fig3") return detuned(base(Model::single, {K::entropy}));
    if (name == "fig4")
        return detuned(base(Model::two,
                            {K::energy_exact, K::energy_transformed, K::energy_deviation}));
    if (name == "fig5") return detuned(base(Model::two, {K::fidelity}));
    if (name == "fig6")
        return detuned(base(Model::two, {K::negativity_exact, K::negativity_transformed,
                                         K::negativity_deviation}));
    if (name == "fig7") {
        SweepConfig c = base(Model::two, {K::negativity_exact});
        c.w_b_over_w_a = 1.0;
        return {{"wb_1", c}};
    }
    if (name == "fig8") return detuned(base(Model::two, {K::entropy}));
    throw UnknownPreset("unknown preset: " + name);
}

}  // namespace asrm
