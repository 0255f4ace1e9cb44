#pragma once

#include <span>
#include <vector>

#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"

namespace casimir {

// Causality checks for the nonlocal response: the real-axis dispersion
// relation evaluated by principal-value quadrature, and the imaginary-axis
// reconstruction from Im eps on the real axis.

double im_eps_real_axis(const material_spec& m, double hbar_omega_ev, double k,
                        wave_branch branch);
double re_eps_real_axis(const material_spec& m, double hbar_omega_ev, double k,
                        wave_branch branch);

// eps(i xi) = 1 + (2/pi) Int_0^inf x Im eps(x, k)/(x^2 + xi^2) dx, plus the
// (wp^2/xi^2)(v_tr k/gamma) term carried by the transverse branch. The domain
// is truncated at 200 eV with the closed-form 1/x^3 tail appended. Setting
// include_pole_term = false is the negative control.
double reconstruct_imag_axis(const material_spec& m, double hbar_xi_ev, double k,
                             wave_branch branch, const quadrature_spec& spec = {},
                             bool include_pole_term = true);

// Static transverse conductivity wp^2 (gamma - v_tr k)/(4 pi gamma^2), all
// energies in eV; changes sign at k = gamma/(hbar v_tr).
double static_transverse_conductivity(const material_spec& m, double k);

struct kk_point {
    double hbar_ev;
    double reconstructed;
    double direct;
};

struct kk_report {
    wave_branch branch;
    double k;
    std::vector<double> omega_grid_ev;
    double max_real_axis_residual = 0.0;
    std::vector<kk_point> imag_axis;
    double max_imag_axis_residual = 0.0;
};

// Re-from-Im dispersion check on omega_grid (principal value, with the
// second-order-pole term on the transverse branch) plus the imaginary-axis
// reconstruction on xi_grid. Either grid may be empty. Requires gamma > 0.
kk_report kk_residual(const material_spec& m, double k, wave_branch branch,
                      std::span<const double> omega_grid_ev,
                      std::span<const double> xi_grid_ev,
                      const quadrature_spec& spec = {});

}  // namespace casimir
