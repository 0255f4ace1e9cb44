#include <doctest.h>

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/impedance.hpp"
#include "casimir/materials.hpp"

using namespace casimir;

namespace {

material_spec nonlocal_gold() {
    material_spec m;
    m.name = "au";
    m.hbar_omega_p_ev = 9.0;
    m.hbar_gamma_ev = 0.035;
    m.v_tr = m.v_l = 1.5 * fermi_velocity(9.0);
    return m;
}

// brute-force mapped-trapezoid evaluation of the TM impedance integrals,
// independent of the adaptive engine
double trapezoid_z_tm(const material_spec& m, double hbar_xi_ev, double p, int n) {
    auto c = impedance_coefficients::at(m, hbar_xi_ev);
    double sum1 = 0.0, sum2 = 0.0;
    double h = 1.0 / n;
    for (int i = 1; i < n; ++i) {
        double t = i * h;
        double x = t / (1.0 - t);
        double jac = 1.0 / ((1.0 - t) * (1.0 - t));
        double s2 = p * p + x * x;
        double s = std::sqrt(s2);
        sum1 += jac * (1.0 + c.u_l * s) / (s2 * (c.A + c.u_l * s));
        sum2 += jac * x * x / (s2 * (c.A + c.D * s + s2));
    }
    // endpoints: at t = 0 the first integrand is finite, the second vanishes;
    // at t = 1 both mapped integrands tend to 1
    double left1 = (1.0 + c.u_l * p) / (p * p * (c.A + c.u_l * p));
    sum1 += 0.5 * (left1 + 1.0);
    sum2 += 0.5 * 1.0;
    return (2.0 * p * p / pi) * h * sum1 + (2.0 / pi) * h * sum2;
}

}  // namespace

TEST_SUITE("impedance") {

TEST_CASE("local impedances") {
    auto vac = z_local_from_eps(1.0, 1.0, 0.0);
    CHECK(vac.z_tm == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(vac.z_te == doctest::Approx(1.0).epsilon(1e-15));

    auto z = z_local_from_eps(100.0, 1.0, 1.0);
    CHECK(z.z_tm == doctest::Approx(std::sqrt(101.0) / 100.0).epsilon(1e-14));
    CHECK(z.z_te == doctest::Approx(1.0 / std::sqrt(101.0)).epsilon(1e-14));
}

TEST_CASE("nonlocal integrals recover the local forms at v = 0") {
    // A = 1 + wp^2/xi^2 = 100 with core = 1, gamma = 0, v = 0
    material_spec m;
    m.name = "toy";
    m.hbar_omega_p_ev = std::sqrt(99.0);
    CHECK(z_nonlocal_tm(m, 1, 1.0, 1.0) ==
          doctest::Approx(std::sqrt(101.0) / 100.0).epsilon(1e-8));
    CHECK(z_nonlocal_te(m, 1, 1.0, 1.0) ==
          doctest::Approx(1.0 / std::sqrt(101.0)).epsilon(1e-8));

    material_spec au = nonlocal_gold();
    au.v_tr = au.v_l = 0.0;
    double xi1 = 0.162434496;
    for (double p : {0.1, 1.0, 10.0}) {
        auto local = z_local(au, 1, xi1, p);
        CHECK(z_nonlocal_tm(au, 1, xi1, p) == doctest::Approx(local.z_tm).epsilon(1e-7));
        CHECK(z_nonlocal_te(au, 1, xi1, p) == doctest::Approx(local.z_te).epsilon(1e-7));
    }
}

TEST_CASE("nonlocal TM integral against a dense trapezoid oracle") {
    material_spec m = nonlocal_gold();
    double xi1 = 0.162434496;
    for (double p : {0.5, 1.0, 30.0}) {
        double adaptive = z_nonlocal_tm(m, 1, xi1, p);
        // Richardson-extrapolated trapezoid kills the O(h^2) tail error
        double coarse = trapezoid_z_tm(m, xi1, p, 1 << 22);
        double fine = trapezoid_z_tm(m, xi1, p, 1 << 23);
        double brute = (4.0 * fine - coarse) / 3.0;
        CHECK(adaptive == doctest::Approx(brute).epsilon(1e-7));
    }
}

TEST_CASE("TE impedance decreases with p") {
    material_spec m = nonlocal_gold();
    double xi1 = 0.162434496;
    double z1 = z_nonlocal_te(m, 1, xi1, 0.5);
    double z2 = z_nonlocal_te(m, 1, xi1, 1.0);
    double z3 = z_nonlocal_te(m, 1, xi1, 5.0);
    CHECK(z1 > z2);
    CHECK(z2 > z3);
}

TEST_CASE("coefficients") {
    material_spec m = nonlocal_gold();
    double xi1 = 0.162434496;
    auto c = impedance_coefficients::at(m, xi1);
    double drude = 81.0 / (xi1 * (xi1 + 0.035));
    CHECK(c.A == doctest::Approx(1.0 + drude).epsilon(1e-13));
    CHECK(c.D == doctest::Approx(drude * m.v_tr / speed_of_light).epsilon(1e-13));
    CHECK(c.u_l == m.v_l / speed_of_light);
    CHECK_THROWS_AS(impedance_coefficients::at(m, 0.0), model_error);
}

TEST_CASE("two-branch kernel") {
    CHECK(branch_kernel(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    // closed forms against the series across the switchover
    auto series = [](double d) {
        return 1.0 + d * (-2.0 / 3.0 + d * (7.0 / 15.0 - d * 12.0 / 35.0));
    };
    for (double d : {1e-5, -1e-5, 3e-6, -3e-6}) {
        CHECK(branch_kernel(1.0 + d) == doctest::Approx(series(d)).epsilon(1e-9));
    }
    // continuity right at the switchover; the exact branch loses a few digits
    // to cancellation this close to u = 1
    CHECK(branch_kernel(1.0 + 0.999e-6) ==
          doctest::Approx(branch_kernel(1.0 + 1.001e-6)).epsilon(1e-8));
    // plain-branch spot values
    CHECK(branch_kernel(0.5) ==
          doctest::Approx(std::log((1.0 + std::sqrt(0.75)) / 0.5) / std::sqrt(0.75))
              .epsilon(1e-14));
    CHECK(branch_kernel(2.0) == doctest::Approx((pi / 3.0) / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("zero-frequency scales and impedances") {
    material_spec m = nonlocal_gold();
    double b = zero_frequency_b(m);
    double B = zero_frequency_B(m);
    CHECK(b > 0.0);
    CHECK(B > 0.0);
    CHECK(b == doctest::Approx(81.0 / (0.035 * hbar_ev_s * m.v_l)).epsilon(1e-13));

    CHECK(z0_tm(m, b) == doctest::Approx(2.0 * b / pi).epsilon(1e-12));
    CHECK(z0_tm(m, b * 1e-6) < 1e-5 * b);  // long-wavelength limit
    CHECK(z0_te(m, 1.0, B) == doctest::Approx(2.0 / (pi * B)).epsilon(1e-12));

    material_spec lossless = m;
    lossless.hbar_gamma_ev = 0.0;
    CHECK_THROWS_AS(zero_frequency_b(lossless), model_error);
    material_spec local = m;
    local.v_l = 0.0;
    CHECK_THROWS_AS(zero_frequency_b(local), model_error);
    local = m;
    local.v_tr = 0.0;
    CHECK_THROWS_AS(zero_frequency_B(local), model_error);
}

}  // TEST_SUITE
