#include "casimir/materials.hpp"

#include <algorithm>
#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

void material_spec::validate() const {
    if (!(hbar_omega_p_ev > 0.0))
        throw validation_error("material '" + name + "': hbar_omega_p_ev must be > 0");
    if (hbar_gamma_ev < 0.0)
        throw validation_error("material '" + name + "': hbar_gamma_ev must be >= 0");
    if (v_tr < 0.0 || v_l < 0.0)
        throw validation_error("material '" + name + "': velocities must be >= 0");
    if (v_tr >= speed_of_light || v_l >= speed_of_light)
        throw validation_error("material '" + name + "': velocities must be < c");
    if (mu_static < 1.0)
        throw validation_error("material '" + name + "': mu_static must be >= 1");
    if (const auto* osc = std::get_if<oscillator_set>(&core)) {
        for (const auto& o : osc->entries)
            if (!(o.omega_ev > 0.0) || o.g_ev2 < 0.0 || o.gamma_ev < 0.0)
                throw validation_error("material '" + name + "': bad oscillator entry");
    } else if (const auto* tab = std::get_if<core_table>(&core)) {
        if (tab->hbar_xi_ev.size() != tab->eps_c.size() || tab->hbar_xi_ev.empty())
            throw validation_error("material '" + name + "': core table shape mismatch");
        for (std::size_t i = 0; i < tab->hbar_xi_ev.size(); ++i) {
            if (tab->eps_c[i] < 1.0)
                throw validation_error("material '" + name + "': core table eps_c < 1");
            if (i > 0 && tab->hbar_xi_ev[i] <= tab->hbar_xi_ev[i - 1])
                throw validation_error("material '" + name + "': core table not strictly increasing");
        }
    }
}

double core_permittivity_imag(const core_permittivity& core, double hbar_xi_ev) {
    if (hbar_xi_ev < 0.0) throw model_error("core_permittivity_imag: hbar_xi must be >= 0");
    if (std::holds_alternative<std::monostate>(core)) return 1.0;
    if (const auto* osc = std::get_if<oscillator_set>(&core)) {
        double s = 1.0;
        for (const auto& o : osc->entries)
            s += o.g_ev2 / (o.omega_ev * o.omega_ev + hbar_xi_ev * hbar_xi_ev + o.gamma_ev * hbar_xi_ev);
        return s;
    }
    const auto& tab = std::get<core_table>(core);
    const auto& xs = tab.hbar_xi_ev;
    const auto& ys = tab.eps_c;
    if (hbar_xi_ev <= xs.front()) {
        if (!tab.allow_extrapolation && hbar_xi_ev < xs.front())
            throw std::out_of_range("core table: hbar_xi below first node");
        return ys.front();  // constant extrapolation downward
    }
    if (hbar_xi_ev >= xs.back()) {
        if (!tab.allow_extrapolation && hbar_xi_ev > xs.back())
            throw std::out_of_range("core table: hbar_xi above last node");
        // 1/xi^2 tail matched at the last node
        double c = (ys.back() - 1.0) * xs.back() * xs.back();
        return 1.0 + c / (hbar_xi_ev * hbar_xi_ev);
    }
    auto it = std::upper_bound(xs.begin(), xs.end(), hbar_xi_ev);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    double lx0 = std::log(xs[i - 1]), lx1 = std::log(xs[i]);
    double t = (std::log(hbar_xi_ev) - lx0) / (lx1 - lx0);
    return ys[i - 1] + t * (ys[i] - ys[i - 1]);
}

std::complex<double> core_permittivity_real(const core_permittivity& core, double hbar_omega_ev) {
    if (std::holds_alternative<core_table>(core))
        throw model_error("core_permittivity_real: tabulated cores are imaginary-axis only");
    std::complex<double> s = 1.0;
    if (const auto* osc = std::get_if<oscillator_set>(&core)) {
        for (const auto& o : osc->entries)
            s += o.g_ev2 / (o.omega_ev * o.omega_ev - hbar_omega_ev * hbar_omega_ev
                            - std::complex<double>(0.0, o.gamma_ev * hbar_omega_ev));
    }
    return s;
}

namespace {
double drude_factor(const material_spec& m, double hbar_xi_ev) {
    if (!(hbar_xi_ev > 0.0))
        throw model_error("permittivity at hbar_xi = 0: use the zero-frequency closed forms");
    return m.hbar_omega_p_ev * m.hbar_omega_p_ev / (hbar_xi_ev * (hbar_xi_ev + m.hbar_gamma_ev));
}
}  // namespace

double drude_permittivity_imag(const material_spec& m, double hbar_xi_ev) {
    return core_permittivity_imag(m.core, hbar_xi_ev) + drude_factor(m, hbar_xi_ev);
}

double nonlocal_permittivity_T(const material_spec& m, double hbar_xi_ev, double k) {
    // v k / xi with xi as an angular frequency: hbar v k / (hbar xi)
    double ratio = m.v_tr * k * hbar_ev_s / hbar_xi_ev;
    return core_permittivity_imag(m.core, hbar_xi_ev) + drude_factor(m, hbar_xi_ev) * (1.0 + ratio);
}

double nonlocal_permittivity_L(const material_spec& m, double hbar_xi_ev, double k) {
    double ratio = m.v_l * k * hbar_ev_s / hbar_xi_ev;
    return core_permittivity_imag(m.core, hbar_xi_ev) + drude_factor(m, hbar_xi_ev) / (1.0 + ratio);
}

std::complex<double> nonlocal_permittivity_real(const material_spec& m, double hbar_omega_ev,
                                                double k, wave_branch branch) {
    if (!(hbar_omega_ev > 0.0))
        throw model_error("nonlocal_permittivity_real: hbar_omega must be > 0");
    const double w = hbar_omega_ev, g = m.hbar_gamma_ev, wp2 = m.hbar_omega_p_ev * m.hbar_omega_p_ev;
    // -wp^2/(w(w+ig)) split analytically
    const double W = w * w + g * g;
    const std::complex<double> drude(-wp2 / W, wp2 * g / (w * W));
    const double vk = (branch == wave_branch::transverse ? m.v_tr : m.v_l) * k * hbar_ev_s / w;
    std::complex<double> eps = core_permittivity_real(m.core, w);
    if (branch == wave_branch::transverse)
        eps += drude * std::complex<double>(1.0, vk);
    else
        eps += drude / std::complex<double>(1.0, vk);
    return eps;
}

double fermi_velocity(double hbar_omega_p_ev) {
    if (!(hbar_omega_p_ev > 0.0)) throw model_error("fermi_velocity: hbar_omega_p must be > 0");
    return speed_of_light * std::sqrt(2.0 * hbar_omega_p_ev / electron_rest_energy_ev);
}

double permeability_at_matsubara(const material_spec& m, int l) {
    return l == 0 ? m.mu_static : 1.0;
}

material_spec effective_material(const material_spec& m, response_kind model) {
    material_spec out = m;
    switch (model) {
        case response_kind::drude:
            out.v_tr = out.v_l = 0.0;
            break;
        case response_kind::plasma:
            out.v_tr = out.v_l = 0.0;
            out.hbar_gamma_ev = 0.0;
            break;
        case response_kind::nonlocal:
        case response_kind::user_local:
            break;
    }
    return out;
}

}  // namespace casimir
