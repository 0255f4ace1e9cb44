#include "casimir/kramers_kronig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

namespace casimir {
namespace {

constexpr double real_axis_cutoff_ev = 200.0;

double vk_energy(const material_spec& m, double k, wave_branch branch) {
    return (branch == wave_branch::transverse ? m.v_tr : m.v_l) * k * hbar_ev_s;
}

// x^3 Im eps(x) -> C as x -> inf; the Drude part contributes
// wp^2 (gamma -+ hbar v k) and each oscillator g_j gamma_j.
double tail_coefficient(const material_spec& m, double k, wave_branch branch) {
    double sign = branch == wave_branch::transverse ? -1.0 : 1.0;
    double c = m.hbar_omega_p_ev * m.hbar_omega_p_ev *
               (m.hbar_gamma_ev + sign * vk_energy(m, k, branch));
    if (const auto* osc = std::get_if<oscillator_set>(&m.core))
        for (const auto& o : osc->entries) c += o.g_ev2 * o.gamma_ev;
    return c;
}

void require_dissipative(const material_spec& m, const char* who) {
    if (!(m.hbar_gamma_ev > 0.0))
        throw model_error(std::string(who) + ": gamma = 0 puts poles on the real axis");
}

}  // namespace

double im_eps_real_axis(const material_spec& m, double hbar_omega_ev, double k,
                        wave_branch branch) {
    return std::imag(nonlocal_permittivity_real(m, hbar_omega_ev, k, branch));
}

double re_eps_real_axis(const material_spec& m, double hbar_omega_ev, double k,
                        wave_branch branch) {
    return std::real(nonlocal_permittivity_real(m, hbar_omega_ev, k, branch));
}

double reconstruct_imag_axis(const material_spec& m, double hbar_xi_ev, double k,
                             wave_branch branch, const quadrature_spec& spec,
                             bool include_pole_term) {
    require_dissipative(m, "reconstruct_imag_axis");
    if (!(hbar_xi_ev > 0.0))
        throw model_error("reconstruct_imag_axis: hbar_xi must be > 0");
    const double xi2 = hbar_xi_ev * hbar_xi_ev;
    auto f = [&](double x) {
        return x * im_eps_real_axis(m, x, k, branch) / (x * x + xi2);
    };
    double body = integrate(f, 0.0, real_axis_cutoff_ev, spec).value;
    // Int_M^inf dx/(x^2 (x^2+xi^2)) in closed form
    const double mcut = real_axis_cutoff_ev;
    double tail = tail_coefficient(m, k, branch) / xi2 *
                  (1.0 / mcut - (pi / 2.0 - std::atan(mcut / hbar_xi_ev)) / hbar_xi_ev);
    double eps = 1.0 + (2.0 / pi) * (body + tail);
    if (branch == wave_branch::transverse && include_pole_term)
        eps += m.hbar_omega_p_ev * m.hbar_omega_p_ev / xi2 *
               (vk_energy(m, k, branch) / m.hbar_gamma_ev);
    return eps;
}

double static_transverse_conductivity(const material_spec& m, double k) {
    require_dissipative(m, "static_transverse_conductivity");
    double g = m.hbar_gamma_ev;
    return m.hbar_omega_p_ev * m.hbar_omega_p_ev *
           (g - vk_energy(m, k, wave_branch::transverse)) / (4.0 * pi * g * g);
}

kk_report kk_residual(const material_spec& m, double k, wave_branch branch,
                      std::span<const double> omega_grid_ev,
                      std::span<const double> xi_grid_ev, const quadrature_spec& spec) {
    require_dissipative(m, "kk_residual");
    for (std::size_t i = 1; i < omega_grid_ev.size(); ++i)
        if (!(omega_grid_ev[i] > omega_grid_ev[i - 1]))
            throw validation_error("kk_residual: omega grid must increase");

    kk_report rep;
    rep.branch = branch;
    rep.k = k;
    rep.omega_grid_ev.assign(omega_grid_ev.begin(), omega_grid_ev.end());

    std::vector<double> residuals(omega_grid_ev.size(), 0.0);
    parallel_for(omega_grid_ev.size(), [&](std::size_t i) {
        const double w = omega_grid_ev[i];
        if (!(w > 0.0)) throw validation_error("kk_residual: grid must be positive");
        auto f = [&](double x) {
            return (2.0 / pi) * x * im_eps_real_axis(m, x, k, branch) / (x * x - w * w);
        };
        principal_value_spec pv;
        pv.pole_location = w;
        pv.window_half_width = 0.4 * w;
        pv.base = spec;
        double rec = 1.0 + principal_value(f, 0.0, std::numeric_limits<double>::infinity(), pv);
        if (branch == wave_branch::transverse)
            rec -= m.hbar_omega_p_ev * m.hbar_omega_p_ev / (w * w) *
                   (vk_energy(m, k, branch) / m.hbar_gamma_ev);
        double exact = re_eps_real_axis(m, w, k, branch);
        residuals[i] = std::abs(rec - exact) / std::max(std::abs(exact), 1.0);
    });
    for (double r : residuals) rep.max_real_axis_residual = std::max(rep.max_real_axis_residual, r);

    rep.imag_axis.resize(xi_grid_ev.size());
    parallel_for(xi_grid_ev.size(), [&](std::size_t i) {
        double xi = xi_grid_ev[i];
        double rec = reconstruct_imag_axis(m, xi, k, branch, spec);
        double direct = branch == wave_branch::transverse
                            ? nonlocal_permittivity_T(m, xi, k)
                            : nonlocal_permittivity_L(m, xi, k);
        rep.imag_axis[i] = {xi, rec, direct};
    });
    for (const auto& p : rep.imag_axis)
        rep.max_imag_axis_residual =
            std::max(rep.max_imag_axis_residual,
                     std::abs(p.reconstructed - p.direct) / std::abs(p.direct));
    return rep;
}

}  // namespace casimir
