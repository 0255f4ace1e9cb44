#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace casimir {

// One Lorentz oscillator of the core-electron (interband) permittivity:
// strength g in eV^2, resonance omega and damping gamma in eV.
struct oscillator {
    double g_ev2;
    double omega_ev;
    double gamma_ev;
};

struct oscillator_set {
    std::vector<oscillator> entries;
};

// Tabulated eps_c(i xi) curve, strictly increasing in hbar_xi_ev.
// Interpolation is linear in eps_c versus log(hbar_xi); below the first node
// the value is held constant, above the last node a 1/xi^2 tail matched at
// the last node carries eps_c -> 1.
struct core_table {
    std::vector<double> hbar_xi_ev;
    std::vector<double> eps_c;
    bool allow_extrapolation = true;
};

// Core-electron permittivity source: vacuum (constant 1), oscillator fit, or
// a tabulated imaginary-axis curve.
using core_permittivity = std::variant<std::monostate, oscillator_set, core_table>;

struct material_spec {
    std::string name;
    double hbar_omega_p_ev = 0.0;  // > 0
    double hbar_gamma_ev = 0.0;    // >= 0
    double v_tr = 0.0;             // m/s
    double v_l = 0.0;              // m/s
    double mu_static = 1.0;        // mu(0), >= 1
    core_permittivity core;

    void validate() const;  // throws validation_error
};

enum class response_kind { drude, plasma, nonlocal, user_local };
enum class wave_branch { transverse, longitudinal };

// eps_c(i xi); >= 1 for physical parameters, exactly 1 for the vacuum core.
double core_permittivity_imag(const core_permittivity& core, double hbar_xi_ev);

// eps_c(omega) on the real axis (oscillator or vacuum core only).
std::complex<double> core_permittivity_real(const core_permittivity& core, double hbar_omega_ev);

// Local Drude permittivity eps_c(i xi) + wp^2/(xi(xi+gamma)). hbar_xi > 0.
double drude_permittivity_imag(const material_spec& m, double hbar_xi_ev);

// Spatially nonlocal permittivities at imaginary frequency; k in 1/m.
double nonlocal_permittivity_T(const material_spec& m, double hbar_xi_ev, double k);
double nonlocal_permittivity_L(const material_spec& m, double hbar_xi_ev, double k);

// Nonlocal permittivity on the real frequency axis.
std::complex<double> nonlocal_permittivity_real(const material_spec& m, double hbar_omega_ev,
                                                double k, wave_branch branch);

// Fermi velocity for a spherical Fermi surface, m_e v_F^2 / 2 = hbar omega_p.
double fermi_velocity(double hbar_omega_p_ev);

// mu(i xi_l): mu_static at l = 0, exactly 1 for l >= 1.
double permeability_at_matsubara(const material_spec& m, int l);

// Copy of m with the response model applied: Drude zeroes the nonlocal
// velocities, plasma additionally zeroes gamma. Nonlocal returns m unchanged.
material_spec effective_material(const material_spec& m, response_kind model);

}  // namespace casimir
