#include <doctest.h>

#include <cmath>
#include <complex>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/materials.hpp"

using namespace casimir;

namespace {

material_spec simple_gold() {
    material_spec m;
    m.name = "au";
    m.hbar_omega_p_ev = 9.0;
    m.hbar_gamma_ev = 0.035;
    m.v_tr = m.v_l = 1.5 * fermi_velocity(9.0);
    return m;
}

}  // namespace

TEST_SUITE("materials") {

TEST_CASE("core permittivity on the imaginary axis") {
    CHECK(core_permittivity_imag(std::monostate{}, 3.0) == 1.0);
    CHECK(core_permittivity_imag(oscillator_set{}, 0.7) == 1.0);

    oscillator_set one{{{4.0, 2.0, 0.0}}};
    CHECK(core_permittivity_imag(one, 0.0) == doctest::Approx(2.0).epsilon(1e-14));

    oscillator_set damped{{{4.0, 2.0, 1.0}}};
    CHECK(core_permittivity_imag(damped, 2.0) == doctest::Approx(1.4).epsilon(1e-14));
}

TEST_CASE("tabulated core interpolation and extrapolation") {
    core_table tab;
    tab.hbar_xi_ev = {0.1, 1.0, 10.0};
    tab.eps_c = {5.0, 3.0, 1.5};
    // linear in eps versus log(xi): midpoint of the first segment
    double mid = core_permittivity_imag(tab, std::sqrt(0.1 * 1.0));
    CHECK(mid == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(core_permittivity_imag(tab, 0.01) == 5.0);
    // 1/xi^2 tail matched at the last node
    CHECK(core_permittivity_imag(tab, 20.0) ==
          doctest::Approx(1.0 + 0.5 * 100.0 / 400.0).epsilon(1e-12));
    tab.allow_extrapolation = false;
    CHECK_THROWS_AS(core_permittivity_imag(tab, 0.01), std::out_of_range);
    CHECK_THROWS_AS(core_permittivity_imag(tab, 11.0), std::out_of_range);
}

TEST_CASE("local permittivity on the imaginary axis") {
    material_spec m = simple_gold();
    double xi1 = 0.162434496;  // first Matsubara energy at 300 K
    double expected = 1.0 + 81.0 / (xi1 * (xi1 + 0.035));
    CHECK(drude_permittivity_imag(m, xi1) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(expected == doctest::Approx(2526.7).epsilon(2e-4));
    CHECK_THROWS_AS(drude_permittivity_imag(m, 0.0), model_error);

    material_spec plasma = simple_gold();
    plasma.hbar_gamma_ev = 0.0;
    CHECK(drude_permittivity_imag(plasma, 9.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("nonlocal permittivities on the imaginary axis") {
    material_spec m = simple_gold();
    double xi = 0.162434496;
    double drude = drude_permittivity_imag(m, xi);
    CHECK(nonlocal_permittivity_T(m, xi, 0.0) == drude);
    CHECK(nonlocal_permittivity_L(m, xi, 0.0) == drude);

    // v k = xi doubles the transverse Drude term and halves the longitudinal
    double k_unit = xi / (m.v_tr * hbar_ev_s);
    CHECK(nonlocal_permittivity_T(m, xi, k_unit) ==
          doctest::Approx(1.0 + 2.0 * (drude - 1.0)).epsilon(1e-12));
    CHECK(nonlocal_permittivity_L(m, xi, k_unit) ==
          doctest::Approx(1.0 + 0.5 * (drude - 1.0)).epsilon(1e-12));

    // screening limit
    CHECK(nonlocal_permittivity_L(m, xi, 1e17) == doctest::Approx(1.0).epsilon(1e-4));

    // ordering eps_L <= eps_Drude <= eps_T over a k grid
    for (double k = 1e5; k <= 1e10; k *= 10.0) {
        CHECK(nonlocal_permittivity_L(m, xi, k) <= drude);
        CHECK(nonlocal_permittivity_T(m, xi, k) >= drude);
    }
}

TEST_CASE("nonlocal permittivity on the real axis") {
    material_spec m = simple_gold();
    auto local = nonlocal_permittivity_real(m, 2.0, 0.0, wave_branch::transverse);
    std::complex<double> w(2.0, 0.0);
    std::complex<double> ref =
        1.0 - 81.0 / (w * (w + std::complex<double>(0.0, 0.035)));
    CHECK(std::abs(local - ref) < 1e-12);
    CHECK(local.imag() > 0.0);

    // wp = 1, gamma = 1, core = 1, omega = 1, v k/omega = 1 gives exactly zero
    material_spec toy;
    toy.name = "toy";
    toy.hbar_omega_p_ev = 1.0;
    toy.hbar_gamma_ev = 1.0;
    toy.v_tr = 1.0;
    double k = 1.0 / hbar_ev_s;  // hbar v k = 1 eV with v = 1 m/s
    auto z = nonlocal_permittivity_real(toy, 1.0, k, wave_branch::transverse);
    CHECK(std::abs(z) < 1e-12);
}

TEST_CASE("fermi velocity") {
    CHECK(fermi_velocity(8.9) == doctest::Approx(1.77e6).epsilon(5e-3));
    CHECK(fermi_velocity(4.89) == doctest::Approx(1.31e6).epsilon(5e-3));
    CHECK(fermi_velocity(9.0) == doctest::Approx(1.78e6).epsilon(5e-3));
    CHECK(fermi_velocity(4.0) == doctest::Approx(2.0 * fermi_velocity(1.0)).epsilon(1e-12));
}

TEST_CASE("permeability steps to unity above l = 0") {
    material_spec ni;
    ni.name = "ni";
    ni.hbar_omega_p_ev = 4.89;
    ni.mu_static = 110.0;
    CHECK(permeability_at_matsubara(ni, 0) == 110.0);
    CHECK(permeability_at_matsubara(ni, 1) == 1.0);
    material_spec au = simple_gold();
    CHECK(permeability_at_matsubara(au, 0) == 1.0);
    CHECK(permeability_at_matsubara(au, 7) == 1.0);
}

TEST_CASE("model selectors") {
    material_spec m = simple_gold();
    material_spec d = effective_material(m, response_kind::drude);
    CHECK(d.v_tr == 0.0);
    CHECK(d.v_l == 0.0);
    CHECK(d.hbar_gamma_ev == m.hbar_gamma_ev);
    material_spec p = effective_material(m, response_kind::plasma);
    CHECK(p.v_tr == 0.0);
    CHECK(p.hbar_gamma_ev == 0.0);
    material_spec n = effective_material(m, response_kind::nonlocal);
    CHECK(n.v_tr == m.v_tr);
}

TEST_CASE("validation") {
    material_spec m = simple_gold();
    CHECK_NOTHROW(m.validate());
    m.hbar_omega_p_ev = 0.0;
    CHECK_THROWS_AS(m.validate(), validation_error);
    m = simple_gold();
    m.mu_static = 0.5;
    CHECK_THROWS_AS(m.validate(), validation_error);
    m = simple_gold();
    m.v_tr = 3.1e8;
    CHECK_THROWS_AS(m.validate(), validation_error);
    m = simple_gold();
    m.core = oscillator_set{{{1.0, -2.0, 0.0}}};
    CHECK_THROWS_AS(m.validate(), validation_error);
}

}  // TEST_SUITE
