#pragma once

#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"

namespace casimir {

// Reflection amplitudes for the two polarizations at a metal half-space,
// evaluated on the imaginary frequency axis where both are real.
struct reflection_pair {
    double r_tm;
    double r_te;
};

// Fresnel amplitudes at l >= 1 in the dimensionless transverse variable
// p = kperp c / xi_l:
//   r_TM = (eps s - t)/(eps s + t), r_TE = (mu s - t)/(mu s + t)
// with s = sqrt(1 + p^2), t = sqrt(p^2 + eps mu).
reflection_pair fresnel_pair(double eps, double mu, double p);

// Zero-Matsubara limits of the Fresnel amplitudes for the local models.
// Drude: r_TM = 1, r_TE = (mu0 - 1)/(mu0 + 1).
// Plasma: r_TM = 1, r_TE from the finite eps*xi^2 -> mu0 wp^2 limit.
reflection_pair fresnel_zero_drude(double mu0);
reflection_pair fresnel_zero_plasma(const material_spec& m, double kperp);

// Surface-impedance amplitudes, q_tilde = c q_l / xi_l = sqrt(1 + p^2):
//   r_TM = (q_tilde - Z_TM)/(q_tilde + Z_TM),
//   r_TE = (q_tilde Z_TE - 1)/(q_tilde Z_TE + 1).
reflection_pair impedance_pair(double q_tilde, double z_tm, double z_te);

// Zero-Matsubara nonlocal amplitudes from the closed-form impedances.
// Require gamma > 0; v_l = 0 (resp. v_tr = 0) falls back to the Drude value.
double nonlocal_zero_tm(const material_spec& m, double kperp);
double nonlocal_zero_te(const material_spec& m, double mu0, double kperp);

// Default tolerance of the nonlocal impedance integrals.
inline quadrature_spec impedance_quadrature() {
    quadrature_spec s;
    s.rel_tol = 1e-9;
    return s;
}

// Central dispatch. Local models take the Fresnel path at every l; the
// nonlocal model takes the closed forms at l = 0 and the impedance path at
// l >= 1. The response model is applied to the material internally.
reflection_pair reflect(const material_spec& m, response_kind model, int l,
                        double hbar_xi_ev, double p,
                        const quadrature_spec& spec = impedance_quadrature());
reflection_pair reflect_zero(const material_spec& m, response_kind model, double kperp);

}  // namespace casimir
