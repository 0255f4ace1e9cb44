#include "casimir/reflection.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/impedance.hpp"

namespace casimir {

reflection_pair fresnel_pair(double eps, double mu, double p) {
    double s = std::sqrt(1.0 + p * p);
    double t = std::sqrt(p * p + eps * mu);
    return {(eps * s - t) / (eps * s + t), (mu * s - t) / (mu * s + t)};
}

reflection_pair fresnel_zero_drude(double mu0) {
    // eps*xi^2 -> 0 as xi -> 0, so the TE transverse wave number tends to
    // kperp and only the permeability survives
    return {1.0, (mu0 - 1.0) / (mu0 + 1.0)};
}

reflection_pair fresnel_zero_plasma(const material_spec& m, double kperp) {
    double mu0 = m.mu_static;
    double kc = kperp * hbar_c_ev_m;  // eV
    double root = std::sqrt(kc * kc + mu0 * m.hbar_omega_p_ev * m.hbar_omega_p_ev);
    return {1.0, (mu0 * kc - root) / (mu0 * kc + root)};
}

reflection_pair impedance_pair(double q_tilde, double z_tm, double z_te) {
    return {(q_tilde - z_tm) / (q_tilde + z_tm),
            (q_tilde * z_te - 1.0) / (q_tilde * z_te + 1.0)};
}

double nonlocal_zero_tm(const material_spec& m, double kperp) {
    if (!(m.hbar_gamma_ev > 0.0))
        throw model_error("nonlocal_zero_tm: gamma = 0 has no dissipative closed form");
    if (m.v_l == 0.0) return 1.0;  // b -> inf limit
    double z = z0_tm(m, kperp);
    return (kperp - z) / (kperp + z);
}

double nonlocal_zero_te(const material_spec& m, double mu0, double kperp) {
    if (!(m.hbar_gamma_ev > 0.0))
        throw model_error("nonlocal_zero_te: gamma = 0 has no dissipative closed form");
    if (m.v_tr == 0.0) return (mu0 - 1.0) / (mu0 + 1.0);  // B -> 0 limit
    double kz = kperp * z0_te(m, mu0, kperp);
    return (kz - 1.0) / (kz + 1.0);
}

reflection_pair reflect(const material_spec& m, response_kind model, int l,
                        double hbar_xi_ev, double p, const quadrature_spec& spec) {
    if (l < 1) throw model_error("reflect: l = 0 goes through reflect_zero");
    material_spec em = effective_material(m, model);
    if (model == response_kind::nonlocal) {
        double q_tilde = std::sqrt(1.0 + p * p);
        double ztm = z_nonlocal_tm(em, l, hbar_xi_ev, p, spec);
        double zte = z_nonlocal_te(em, l, hbar_xi_ev, p, spec);
        return impedance_pair(q_tilde, ztm, zte);
    }
    double eps = drude_permittivity_imag(em, hbar_xi_ev);
    return fresnel_pair(eps, permeability_at_matsubara(em, l), p);
}

reflection_pair reflect_zero(const material_spec& m, response_kind model, double kperp) {
    material_spec em = effective_material(m, model);
    switch (model) {
        case response_kind::drude:
        case response_kind::user_local:
            return fresnel_zero_drude(em.mu_static);
        case response_kind::plasma:
            return fresnel_zero_plasma(em, kperp);
        case response_kind::nonlocal:
            return {nonlocal_zero_tm(em, kperp),
                    nonlocal_zero_te(em, em.mu_static, kperp)};
    }
    throw model_error("reflect_zero: bad model");
}

}  // namespace casimir
