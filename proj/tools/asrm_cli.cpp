// Command-line front end: grid sweeps, figure presets, single-point
// diagnostics and convergence reports.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "asrm/entanglement.hpp"
#include "asrm/exact.hpp"
#include "asrm/sweep.hpp"
#include "asrm/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;  // sweep finished with >= 1 non-ok point

void print_scalar(const char* name, double v) { std::printf("%-24s %.12g\n", name, v); }

int run_point(const std::string& model, double wb, double c1, double c2) {
    using namespace asrm;
    if (model == "single") {
        SingleQubitParams p(1.0, wb, c1, c2);
        auto sol = converged_ground_state(p);
        CoherentAmplitude xi = solve_xi1(p);
        int n = sol.n_max_used;
        TransformedAnsatz ansatz = ansatz_single(p, FockSpace(n));
        DensityMatrix rho = reduced_density(sol.state, Subsystem::spin, 2, n + 1);
        print_scalar("energy_exact", sol.energy);
        print_scalar("energy_transformed", ansatz.energy_transformed);
        print_scalar("energy_quadratic", ansatz.energy_quadratic_approx);
        print_scalar("xi1", xi.alpha);
        print_scalar("xi1_linear", xi1_linear_approx(p).alpha);
        print_scalar("root_residual", ansatz.root_residual);
        print_scalar("fidelity", fidelity(ansatz.ansatz_state, sol.state));
        print_scalar("entropy_qubit", von_neumann_entropy(rho));
        std::printf("%-24s %d\n", "n_max_used", n);
        return kExitOk;
    }
    TwoQubitParams p(1.0, wb, c1, c2);
    auto sol = converged_ground_state(p, Frame::rotated);
    CoherentAmplitude xi = solve_xi2(p);
    ThreeLevelEigensystem sys = three_level_eigensystem(p, xi);
    int n = sol.n_max_used;
    TransformedAnsatz ansatz = ansatz_two_qubit(p, FockSpace(n));
    Eigen::VectorXcd full = triplet_to_two_qubit(sol.state, n + 1);
    DensityMatrix rho = reduced_density(full, Subsystem::spin, 4, n + 1);
    print_scalar("energy_exact", sol.energy);
    print_scalar("energy_transformed", sys.nu[0]);
    print_scalar("energy_quadratic", ansatz.energy_quadratic_approx);
    print_scalar("xi2", xi.alpha);
    print_scalar("xi2_linear", xi2_linear_approx(p).alpha);
    print_scalar("root_residual", ansatz.root_residual);
    print_scalar("fidelity", fidelity(ansatz.ansatz_state, sol.state));
    print_scalar("entropy_two_qubit", von_neumann_entropy(rho));
    print_scalar("negativity_exact", negativity(rho));
    print_scalar("negativity_transformed",
                 negativity_closed_form(xi, -sys.nu[2] / sys.B));
    print_scalar("negativity_perturbative", negativity_perturbative(p));
    std::printf("%-24s %d\n", "n_max_used", n);
    return kExitOk;
}

int run_convergence(const std::string& model, double wb, double c1, double c2, double tol) {
    using namespace asrm;
    ConvergenceSettings cs;
    cs.tol = tol;
    GroundStateSolution sol =
        model == "single"
            ? converged_ground_state(SingleQubitParams(1.0, wb, c1, c2), cs)
            : converged_ground_state(TwoQubitParams(1.0, wb, c1, c2), Frame::original, cs);
    print_scalar("energy", sol.energy);
    print_scalar("energy_convergence", sol.energy_convergence);
    std::printf("%-24s %d\n", "n_max_used", sol.n_max_used);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ground states of the asymmetric quantum Rabi models"};
    app.require_subcommand(1);

    std::string config_file, preset_name, model = "single", out_dir = ".";
    double wb = 1.0, c1 = 0.0, c2 = 0.0, tol = 1e-8;
    int preset_steps = 61;

    auto* sweep = app.add_subcommand("sweep", "run a sweep from a config file");
    sweep->add_option("config", config_file, "key-value config file")->required();
    sweep->add_option("--out", out_dir, "output directory");

    auto* preset = app.add_subcommand("preset", "run a figure preset (fig1..fig8)");
    preset->add_option("name", preset_name, "preset name")->required();
    preset->add_option("--out", out_dir, "output directory")->required();
    preset->add_option("--steps", preset_steps, "grid steps per axis (default 61)");

    auto* point = app.add_subcommand("point", "scalar diagnostics at one parameter point");
    point->add_option("--model", model, "single|two")->required();
    point->add_option("--wb", wb, "w_b / w_a");
    point->add_option("--c1", c1, "corotating coupling / w_a")->required();
    point->add_option("--c2", c2, "counterrotating coupling / w_a")->required();

    auto* conv = app.add_subcommand("convergence", "truncation convergence report");
    conv->add_option("--model", model, "single|two")->required();
    conv->add_option("--wb", wb, "w_b / w_a");
    conv->add_option("--c1", c1, "corotating coupling / w_a")->required();
    conv->add_option("--c2", c2, "counterrotating coupling / w_a")->required();
    conv->add_option("--tol", tol, "convergence tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed()) {
            std::ifstream in(config_file);
            if (!in) {
                std::cerr << "cannot open config file: " << config_file << "\n";
                return kExitConfig;
            }
            asrm::SweepConfig cfg = asrm::parse_config(in);
            asrm::SweepResult res = asrm::run_sweep(cfg, out_dir);
            for (const auto& f : res.files) std::cout << f << "\n";
            return res.non_ok_records > 0 ? kExitPartial : kExitOk;
        }
        if (preset->parsed()) {
            int non_ok = 0;
            for (const asrm::PresetRun& run : asrm::figure_preset(preset_name, preset_steps)) {
                auto dir = std::filesystem::path(out_dir) / preset_name / run.label;
                asrm::SweepResult res = asrm::run_sweep(run.config, dir);
                for (const auto& f : res.files) std::cout << f << "\n";
                non_ok += res.non_ok_records;
            }
            return non_ok > 0 ? kExitPartial : kExitOk;
        }
        if (point->parsed()) {
            if (model != "single" && model != "two") {
                std::cerr << "--model must be single or two\n";
                return kExitConfig;
            }
            return run_point(model, wb, c1, c2);
        }
        if (conv->parsed()) {
            if (model != "single" && model != "two") {
                std::cerr << "--model must be single or two\n";
                return kExitConfig;
            }
            return run_convergence(model, wb, c1, c2, tol);
        }
    } catch (const asrm::ConfigInvalid& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const asrm::UnknownPreset& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const asrm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
