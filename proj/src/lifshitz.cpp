#include "casimir/lifshitz.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/parallel.hpp"

namespace casimir {

double matsubara_energy(double temperature_k, int l) {
    if (!(temperature_k > 0.0)) throw validation_error("matsubara_energy: T must be > 0");
    if (l < 0) throw validation_error("matsubara_energy: l must be >= 0");
    return 2.0 * pi * k_boltzmann_ev * temperature_k * l;
}

double matsubara_context::zeta(int l) const {
    return 2.0 * separation_m * hbar_xi(l) / hbar_c_ev_m;
}

namespace {

bool same_plate(const plate& a, const plate& b) {
    return a.model == b.model && a.material.name == b.material.name &&
           a.material.hbar_omega_p_ev == b.material.hbar_omega_p_ev &&
           a.material.hbar_gamma_ev == b.material.hbar_gamma_ev &&
           a.material.v_tr == b.material.v_tr && a.material.v_l == b.material.v_l &&
           a.material.mu_static == b.material.mu_static &&
           a.material.core.index() == b.material.core.index();
}

// Integrand weights in the variable y = 2 a q_l. With ew = e^{-y}:
//   pressure kernel  y^2 [rr ew / (1 - rr ew)]
//   energy kernel    y ln(1 - rr ew)
double pressure_kernel(double rr, double ew) {
    double t = rr * ew;
    return t / (1.0 - t);
}

double energy_kernel(double rr, double ew) { return std::log1p(-rr * ew); }

struct series_evaluator {
    const plate_pair& pair;
    const matsubara_context& ctx;
    const lifshitz_spec& spec;
    bool want_pressure;
    bool identical;

    double term(int l) const {
        const double a = ctx.separation_m;
        if (l == 0) {
            auto f = [&](double y) {
                double kperp = y / (2.0 * a);
                reflection_pair r1 = reflect_zero(pair.first.material, pair.first.model, kperp);
                reflection_pair r2 =
                    identical ? r1
                              : reflect_zero(pair.second.material, pair.second.model, kperp);
                double ew = std::exp(-y);
                double tm = r1.r_tm * r2.r_tm, te = r1.r_te * r2.r_te;
                if (want_pressure)
                    return y * y * (pressure_kernel(tm, ew) + pressure_kernel(te, ew));
                return y * (energy_kernel(tm, ew) + energy_kernel(te, ew));
            };
            // half weight of the primed sum
            return 0.5 * integrate(f, 0.0, 1.0 + spec.y_margin, spec.outer).value;
        }
        const double zeta = ctx.zeta(l);
        const double hxi = ctx.hbar_xi(l);
        auto f = [&](double y) {
            double p = std::sqrt(std::max(y * y - zeta * zeta, 0.0)) / zeta;
            reflection_pair r1 =
                reflect(pair.first.material, pair.first.model, l, hxi, p, spec.inner);
            reflection_pair r2 =
                identical ? r1
                          : reflect(pair.second.material, pair.second.model, l, hxi, p,
                                    spec.inner);
            double ew = std::exp(-y);
            double tm = r1.r_tm * r2.r_tm, te = r1.r_te * r2.r_te;
            if (want_pressure)
                return y * y * (pressure_kernel(tm, ew) + pressure_kernel(te, ew));
            return y * (energy_kernel(tm, ew) + energy_kernel(te, ew));
        };
        return integrate(f, zeta, std::max(zeta, 1.0) + spec.y_margin, spec.outer).value;
    }
};

// Primed Matsubara sum with the block-parallel evaluation scheme. Terms are
// accumulated strictly in ascending l; terms computed past the stopping point
// are discarded so the value does not depend on the worker count.
double matsubara_sum(const plate_pair& pair, const matsubara_context& ctx,
                     const lifshitz_spec& spec, bool want_pressure) {
    if (!(ctx.separation_m > 0.0)) throw validation_error("lifshitz: separation must be > 0");
    if (!(ctx.temperature_k > 0.0)) throw validation_error("lifshitz: temperature must be > 0");
    pair.first.material.validate();
    pair.second.material.validate();

    series_evaluator eval{pair, ctx, spec, want_pressure, same_plate(pair.first, pair.second)};
    const truncation_policy& trunc = ctx.truncation;
    constexpr int block = 16;

    kahan_accumulator acc;
    acc.add(eval.term(0));
    int small_run = 0;
    int l_next = 1;
    while (true) {
        if (l_next > trunc.l_max)
            throw convergence_error("lifshitz: Matsubara cap " + std::to_string(trunc.l_max) +
                                        " reached before the series settled",
                                    acc.value(), 0.0);
        int count = std::min(block, trunc.l_max - l_next + 1);
        std::vector<double> terms(static_cast<std::size_t>(count));
        parallel_for(static_cast<std::size_t>(count),
                     [&](std::size_t i) { terms[i] = eval.term(l_next + static_cast<int>(i)); });
        for (int i = 0; i < count; ++i) {
            acc.add(terms[static_cast<std::size_t>(i)]);
            double total = acc.value();
            if (std::abs(terms[static_cast<std::size_t>(i)]) <=
                trunc.term_rel_tol * std::abs(total))
                ++small_run;
            else
                small_run = 0;
            if (small_run >= trunc.consecutive && l_next + i >= trunc.consecutive) {
                ctx.last_l_used = l_next + i;
                return acc.value();
            }
        }
        l_next += count;
    }
}

}  // namespace

double free_energy(const plate_pair& pair, const matsubara_context& ctx,
                   const lifshitz_spec& spec) {
    double s = matsubara_sum(pair, ctx, spec, false);
    double a = ctx.separation_m;
    return k_boltzmann_j * ctx.temperature_k / (8.0 * pi * a * a) * s;
}

double pressure(const plate_pair& pair, const matsubara_context& ctx,
                const lifshitz_spec& spec) {
    double s = matsubara_sum(pair, ctx, spec, true);
    double a = ctx.separation_m;
    return -k_boltzmann_j * ctx.temperature_k / (8.0 * pi * a * a * a) * s;
}

}  // namespace casimir
