#pragma once

#include "casimir/materials.hpp"
#include "casimir/numerics.hpp"
#include "casimir/reflection.hpp"

namespace casimir {

// Matsubara sum truncation: stop once `consecutive` successive terms each
// contribute less than term_rel_tol of the running total in magnitude.
struct truncation_policy {
    double term_rel_tol = 1e-10;
    int consecutive = 3;
    int l_max = 20000;
};

// hbar xi_l = 2 pi k_B T l in eV.
double matsubara_energy(double temperature_k, int l);

struct matsubara_context {
    double temperature_k;  // > 0
    double separation_m;   // > 0
    truncation_policy truncation = {};
    // diagnostic: highest l accumulated by the most recent evaluation
    mutable int last_l_used = -1;

    double hbar_xi(int l) const { return matsubara_energy(temperature_k, l); }
    // zeta_l = 2 a xi_l / c, the lower limit of the y integral
    double zeta(int l) const;
};

struct plate {
    material_spec material;
    response_kind model = response_kind::drude;
};

struct plate_pair {
    plate first;
    plate second;
};

struct lifshitz_spec {
    quadrature_spec outer = outer_quadrature();
    quadrature_spec inner = impedance_quadrature();
    // tail margin of the y integral beyond max(zeta_l, 1)
    double y_margin = 60.0;

    static quadrature_spec outer_quadrature() {
        quadrature_spec s;
        s.rel_tol = 1e-8;
        return s;
    }
};

// Free energy per unit plate area in J/m^2 (<= 0 for identical plates) and
// pressure in Pa (< 0 means attraction). Both sum the primed Matsubara series
// with the l = 0 term at half weight; terms of a block are evaluated in
// parallel and accumulated in ascending l with compensated summation.
double free_energy(const plate_pair& pair, const matsubara_context& ctx,
                   const lifshitz_spec& spec = {});
double pressure(const plate_pair& pair, const matsubara_context& ctx,
                const lifshitz_spec& spec = {});

}  // namespace casimir
