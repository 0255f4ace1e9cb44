#include "casimir/impedance.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

impedance_coefficients impedance_coefficients::at(const material_spec& m, double hbar_xi_ev) {
    if (!(hbar_xi_ev > 0.0))
        throw model_error("impedance_coefficients: l = 0 uses the closed forms");
    double drude = m.hbar_omega_p_ev * m.hbar_omega_p_ev
                   / (hbar_xi_ev * (hbar_xi_ev + m.hbar_gamma_ev));
    impedance_coefficients c;
    c.A = core_permittivity_imag(m.core, hbar_xi_ev) + drude;
    c.D = drude * m.v_tr / speed_of_light;
    c.u_l = m.v_l / speed_of_light;
    return c;
}

double zero_frequency_b(const material_spec& m) {
    if (!(m.hbar_gamma_ev > 0.0) || !(m.v_l > 0.0))
        throw model_error("zero_frequency_b: requires gamma > 0 and v_l > 0");
    return m.hbar_omega_p_ev * m.hbar_omega_p_ev / (m.hbar_gamma_ev * hbar_ev_s * m.v_l);
}

double zero_frequency_B(const material_spec& m) {
    if (!(m.hbar_gamma_ev > 0.0) || !(m.v_tr > 0.0))
        throw model_error("zero_frequency_B: requires gamma > 0 and v_tr > 0");
    return m.mu_static * m.hbar_omega_p_ev * m.hbar_omega_p_ev * m.v_tr
           / (m.hbar_gamma_ev * hbar_ev_s * speed_of_light * speed_of_light);
}

impedance_pair_values z_local_from_eps(double eps, double mu, double p) {
    double root = std::sqrt(p * p + eps * mu);
    return {root / eps, mu / root};
}

impedance_pair_values z_local(const material_spec& m, int l, double hbar_xi_ev, double p) {
    if (l < 1) throw model_error("z_local: l = 0 uses the closed forms");
    double eps = drude_permittivity_imag(m, hbar_xi_ev);
    double mu = permeability_at_matsubara(m, l);
    return z_local_from_eps(eps, mu, p);
}

double z_nonlocal_tm(const material_spec& m, int l, double hbar_xi_ev, double p,
                     const quadrature_spec& spec) {
    if (l < 1) throw model_error("z_nonlocal_tm: l = 0 uses the closed forms");
    const auto c = impedance_coefficients::at(m, hbar_xi_ev);
    const double mu = permeability_at_matsubara(m, l);
    const double p2 = p * p;
    auto longitudinal = [&](double x) {
        double s2 = p2 + x * x;
        double s = std::sqrt(s2);
        return (1.0 + c.u_l * s) / (s2 * (c.A + c.u_l * s));
    };
    auto transverse = [&](double x) {
        double s2 = p2 + x * x;
        double s = std::sqrt(s2);
        return x * x / (s2 * (mu * (c.A + c.D * s) + s2));
    };
    double i1 = integrate_semi_infinite(longitudinal, 0.0, spec).value;
    double i2 = integrate_semi_infinite(transverse, 0.0, spec).value;
    return (2.0 * p2 / pi) * i1 + (2.0 * mu / pi) * i2;
}

double z_nonlocal_te(const material_spec& m, int l, double hbar_xi_ev, double p,
                     const quadrature_spec& spec) {
    if (l < 1) throw model_error("z_nonlocal_te: l = 0 uses the closed forms");
    const auto c = impedance_coefficients::at(m, hbar_xi_ev);
    const double mu = permeability_at_matsubara(m, l);
    const double p2 = p * p;
    auto f = [&](double x) {
        double s2 = p2 + x * x;
        return 1.0 / (mu * (c.A + c.D * std::sqrt(s2)) + s2);
    };
    return (2.0 * mu / pi) * integrate_semi_infinite(f, 0.0, spec).value;
}

double branch_kernel(double u) {
    if (!(u > 0.0)) throw model_error("branch_kernel: u must be > 0");
    double d = u - 1.0;
    if (std::abs(d) < 1e-6) {
        // second-order series through the branch point (0/0 on both sides)
        return 1.0 + d * (-2.0 / 3.0 + d * (7.0 / 15.0 - d * 12.0 / 35.0));
    }
    if (u < 1.0) {
        double s = std::sqrt(1.0 - u * u);
        return std::log((1.0 + s) / u) / s;
    }
    double s = std::sqrt(u * u - 1.0);
    return std::acos(1.0 / u) / s;
}

double z0_tm(const material_spec& m, double kperp) {
    double b = zero_frequency_b(m);
    return (2.0 * kperp * kperp / pi) * branch_kernel(kperp / b) / b;
}

double z0_te(const material_spec& m, double mu0, double kperp) {
    material_spec eff = m;
    eff.mu_static = mu0;
    double B = zero_frequency_B(eff);
    return (2.0 * mu0 / pi) * branch_kernel(kperp / B) / B;
}

}  // namespace casimir
