#pragma once

#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"

namespace casimir {

// Dimensionless coefficients of the nonlocal impedance integrands at
// Matsubara index l >= 1, plus the inverse-length scales b, B of the
// zero-frequency closed forms.
struct impedance_coefficients {
    double A;  // eps_c(i xi_l) + wp^2/(xi(xi+gamma))
    double D;  // (wp^2/(xi(xi+gamma))) * v_tr/c
    double u_l;  // v_l/c

    static impedance_coefficients at(const material_spec& m, double hbar_xi_ev);
};

// b = wp^2/(gamma v_l), in 1/m. Requires gamma > 0 and v_l > 0.
double zero_frequency_b(const material_spec& m);
// B = mu(0) wp^2 v_tr/(gamma c^2), in 1/m. Requires gamma > 0 and v_tr > 0.
double zero_frequency_B(const material_spec& m);

// Local impedances Z_TM = sqrt(p^2 + eps mu)/eps, Z_TE = mu/sqrt(p^2 + eps mu)
// at i xi_l, l >= 1; p = kperp c / xi_l.
struct impedance_pair_values {
    double z_tm;
    double z_te;
};
impedance_pair_values z_local(const material_spec& m, int l, double hbar_xi_ev, double p);
impedance_pair_values z_local_from_eps(double eps, double mu, double p);

// Nonlocal impedances at l >= 1 by quadrature of the two-integral forms.
double z_nonlocal_tm(const material_spec& m, int l, double hbar_xi_ev, double p,
                     const quadrature_spec& spec = {});
double z_nonlocal_te(const material_spec& m, int l, double hbar_xi_ev, double p,
                     const quadrature_spec& spec = {});

// Shared two-branch kernel H(u) = ln((1+sqrt(1-u^2))/u)/sqrt(1-u^2) for u < 1,
// arccos(1/u)/sqrt(u^2-1) for u > 1; series through the u = 1 branch point.
double branch_kernel(double u);

// Zero-Matsubara impedances in scaled form. z0_tm returns the coefficient of
// c/xi_0 in Z_TM (units 1/m): (2 kperp^2/pi) H(kperp/b)/b. z0_te returns the
// coefficient of xi_0/c in Z_TE (units m): (2 mu0/pi) H(kperp/B)/B.
double z0_tm(const material_spec& m, double kperp);
double z0_te(const material_spec& m, double mu0, double kperp);

}  // namespace casimir
