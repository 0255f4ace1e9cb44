#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/geometry.hpp"
#include "casimir/harness.hpp"
#include "casimir/kramers_kronig.hpp"
#include "casimir/lifshitz.hpp"

namespace {

using namespace casimir;

scenario resolve_scenario(const std::string& ref) {
    auto names = builtin_scenario_names();
    if (std::find(names.begin(), names.end(), ref) != names.end())
        return builtin_scenario(ref);
    return load_scenario(ref);
}

material_spec resolve_material(const std::string& ref) {
    auto names = builtin_material_names();
    if (std::find(names.begin(), names.end(), ref) != names.end())
        return builtin_material(ref);
    return load_material(ref);
}

void print_rows(const std::vector<comparison_row>& rows, const char* unit) {
    std::printf("%-12s %-9s %14s %14s %14s  %s\n", "a (m)", "model", "central", "low", "high",
                "data");
    for (const auto& r : rows) {
        std::printf("%-12.6g %-9s %14.6e %14.6e %14.6e", r.a_m, model_name(r.model), r.central,
                    r.low, r.high);
        if (r.has_measured)
            std::printf("  %.6e -%.2e/+%.2e %s", r.measured.value, r.measured.err_minus,
                        r.measured.err_plus, r.pass ? "pass" : "FAIL");
        std::printf("\n");
    }
    std::printf("values in %s\n", unit);
}

int run_observable(const std::string& scenario_ref, observable_kind obs,
                   const std::string& models_csv, const std::string& out_path) {
    scenario s = resolve_scenario(scenario_ref);
    s.observable = obs;
    if (!models_csv.empty()) s.models = parse_models(models_csv);
    auto rows = run_scenario(s);
    const char* unit = obs == observable_kind::pressure ? "Pa"
                       : obs == observable_kind::force  ? "N"
                                                        : "N/m";
    print_rows(rows, unit);
    if (!out_path.empty()) {
        if (out_path.size() > 5 && out_path.substr(out_path.size() - 5) == ".json")
            export_json(rows, out_path);
        else
            export_csv(rows, out_path);
        std::printf("wrote %s\n", out_path.c_str());
    }
    return 0;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] =
            lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

int run_kk_check(const std::string& material_ref, const std::string& branch_name, double k) {
    material_spec m = resolve_material(material_ref);
    wave_branch branch =
        branch_name == "T" ? wave_branch::transverse : wave_branch::longitudinal;
    auto omega = log_grid(0.1, 10.0, 20);
    auto xi = log_grid(0.05, 5.0, 10);
    kk_report rep = kk_residual(m, k, branch, omega, xi);

    std::printf("kk report\n");
    std::printf("material = %s\n", m.name.c_str());
    std::printf("branch = %s\n", branch_name.c_str());
    std::printf("k = %.6g 1/m\n", k);
    if (branch == wave_branch::transverse)
        std::printf("static transverse conductivity = %.6g eV\n",
                    static_transverse_conductivity(m, k));
    std::printf("real-axis dispersion check: %zu points in [%.3g, %.3g] eV\n",
                rep.omega_grid_ev.size(), rep.omega_grid_ev.front(), rep.omega_grid_ev.back());
    std::printf("max real-axis residual = %.3e\n", rep.max_real_axis_residual);
    std::printf("imaginary-axis reconstruction (hbar_xi_ev, reconstructed, direct):\n");
    for (const auto& p : rep.imag_axis)
        std::printf("  %12.6g %16.9g %16.9g\n", p.hbar_ev, p.reconstructed, p.direct);
    std::printf("max imaginary-axis residual = %.3e\n", rep.max_imag_axis_residual);
    return 0;
}

int run_sensitivity(const std::string& param, const std::string& material_ref, double a,
                    double temperature) {
    material_spec m = resolve_material(material_ref);
    bool longitudinal = param == "vL";
    sensitivity_result res = sweep_velocity(m, longitudinal, a, temperature);
    std::printf("%s sweep, %s-%s nonlocal, a = %.6g m, T = %.6g K\n", param.c_str(),
                m.name.c_str(), m.name.c_str(), a, temperature);
    std::printf("%14s %16s\n", "v (m/s)", "pressure (Pa)");
    for (const auto& [v, p] : res.sweep) std::printf("%14.6g %16.9e\n", v, p);
    std::printf("max relative pressure change over sweep = %.4f%%\n",
                100.0 * res.max_rel_change);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir interaction between metallic bodies: Lifshitz theory with local "
                 "and spatially nonlocal response"};
    app.require_subcommand(1);

    std::string scenario_ref, models_csv, out_path;
    auto add_observable = [&](const char* name, const char* desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--scenario", scenario_ref, "scenario file or builtin name")->required();
        sub->add_option("--models", models_csv, "comma list: drude,plasma,nonlocal");
        sub->add_option("--out", out_path, "write rows to .csv or .json");
        return sub;
    };
    CLI::App* cmd_pressure = add_observable("pressure", "Casimir pressure between plates");
    CLI::App* cmd_force = add_observable("force", "sphere-plate Casimir force");
    CLI::App* cmd_gradient = add_observable("gradient", "sphere-plate force gradient");

    CLI::App* cmd_kk = app.add_subcommand("kk", "causality checks");
    std::string kk_material, kk_branch = "T";
    double kk_k = 0.0;
    CLI::App* cmd_kk_check = cmd_kk->add_subcommand("check", "dispersion-relation residuals");
    cmd_kk_check->add_option("--material", kk_material, "material file or builtin name")
        ->required();
    cmd_kk_check->add_option("--branch", kk_branch, "T or L")
        ->check(CLI::IsMember({"T", "L"}));
    cmd_kk_check->add_option("--k", kk_k, "wave vector magnitude, 1/m")->required();
    cmd_kk->require_subcommand(1);

    CLI::App* cmd_sens = app.add_subcommand("sensitivity", "pressure sensitivity to v_L, v_Tr");
    std::string sens_param = "vTr", sens_material = "gold-trench";
    double sens_a = 500e-9, sens_temperature = 300.0;
    cmd_sens->add_option("--param", sens_param, "vL or vTr")
        ->required()
        ->check(CLI::IsMember({"vL", "vTr"}));
    cmd_sens->add_option("--material", sens_material, "material file or builtin name");
    cmd_sens->add_option("--a", sens_a, "separation, m");
    cmd_sens->add_option("--temperature", sens_temperature, "temperature, K");

    CLI::App* cmd_ideal = app.add_subcommand("ideal", "ideal-metal pressure reference");
    double ideal_a = 1e-6;
    cmd_ideal->add_option("--a", ideal_a, "separation, m")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (cmd_pressure->parsed())
            return run_observable(scenario_ref, casimir::observable_kind::pressure, models_csv,
                                  out_path);
        if (cmd_force->parsed())
            return run_observable(scenario_ref, casimir::observable_kind::force, models_csv,
                                  out_path);
        if (cmd_gradient->parsed())
            return run_observable(scenario_ref, casimir::observable_kind::gradient, models_csv,
                                  out_path);
        if (cmd_kk->parsed()) return run_kk_check(kk_material, kk_branch, kk_k);
        if (cmd_sens->parsed())
            return run_sensitivity(sens_param, sens_material, sens_a, sens_temperature);
        if (cmd_ideal->parsed()) {
            std::printf("ideal-metal pressure at a = %.6g m: %.9e Pa\n", ideal_a,
                        casimir::ideal_metal_pressure(ideal_a));
            return 0;
        }
    } catch (const casimir::convergence_error& e) {
        std::fprintf(stderr, "convergence failure: %s\n", e.what());
        return 2;
    } catch (const casimir::model_error& e) {
        std::fprintf(stderr, "model error: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
