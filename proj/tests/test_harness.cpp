#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/harness.hpp"
#include "casimir/materials.hpp"

using namespace casimir;

namespace {

std::string data_path(const std::string& rel) {
    return std::string(CASIMIR_DATA_DIR) + "/" + rel;
}

std::string write_temp(const std::string& name, const std::string& body) {
    std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// a cheap scenario for plumbing tests: single plates pressure point
scenario cheap_scenario() {
    scenario s;
    s.id = "cheap";
    s.geometry = geometry_kind::plates;
    s.material1 = builtin_material("gold-trench");
    s.material2 = builtin_material("gold-trench");
    s.models = {response_kind::drude};
    s.separations_m = {500e-9};
    s.observable = observable_kind::pressure;
    return s;
}

}  // namespace

TEST_SUITE("harness") {

TEST_CASE("model name parsing") {
    CHECK(parse_model("drude") == response_kind::drude);
    CHECK(parse_models("drude,plasma,nonlocal").size() == 3);
    CHECK_THROWS_AS(parse_models("drude,drude"), validation_error);
    CHECK_THROWS_AS(parse_models("bogus"), validation_error);
    CHECK_THROWS_AS(parse_models(""), validation_error);
}

TEST_CASE("builtin materials") {
    material_spec au = builtin_material("gold-trench");
    CHECK(au.hbar_omega_p_ev == 9.0);
    CHECK(au.hbar_gamma_ev == 0.035);
    CHECK(au.v_tr == doctest::Approx(1.5 * fermi_velocity(9.0)).epsilon(1e-12));
    CHECK(std::holds_alternative<oscillator_set>(au.core));

    material_spec ni = builtin_material("nickel");
    CHECK(ni.mu_static == 110.0);
    CHECK(ni.hbar_omega_p_ev == 4.89);

    CHECK(builtin_material("gold-decca").hbar_gamma_ev == 0.0357);
    CHECK_THROWS_AS(builtin_material("unobtainium"), validation_error);
}

TEST_CASE("material files round-trip the builtin parameters") {
    material_spec m = load_material(data_path("materials/gold-trench.mat"));
    material_spec b = builtin_material("gold-trench");
    CHECK(m.hbar_omega_p_ev == b.hbar_omega_p_ev);
    CHECK(m.hbar_gamma_ev == b.hbar_gamma_ev);
    CHECK(m.v_tr == doctest::Approx(b.v_tr).epsilon(1e-12));
    CHECK(std::get<oscillator_set>(m.core).entries.size() == 6);

    material_spec ni = load_material(data_path("materials/nickel.mat"));
    CHECK(ni.mu_static == 110.0);
    CHECK(std::holds_alternative<std::monostate>(ni.core));
}

TEST_CASE("tabulated core file tracks the oscillator fit") {
    material_spec tab = load_material(data_path("materials/gold-table.mat"));
    material_spec osc = builtin_material("gold-trench");
    for (double xi : {0.05, 0.2, 1.0, 10.0}) {
        CHECK(core_permittivity_imag(tab.core, xi) ==
              doctest::Approx(core_permittivity_imag(osc.core, xi)).epsilon(1e-2));
    }
}

TEST_CASE("material file validation errors") {
    std::string no_name = write_temp("mat_no_name.mat", "hbar_omega_p_ev = 9.0\n");
    CHECK_THROWS_WITH_AS(load_material(no_name), doctest::Contains("name"),
                         validation_error);
    std::string bad_osc = write_temp(
        "mat_bad_osc.mat", "name = x\nhbar_omega_p_ev = 9\noscillator = 1 2\n");
    CHECK_THROWS_WITH_AS(load_material(bad_osc), doctest::Contains("oscillator"),
                         validation_error);
    std::string bad_num =
        write_temp("mat_bad_num.mat", "name = x\nhbar_omega_p_ev = lots\n");
    CHECK_THROWS_WITH_AS(load_material(bad_num), doctest::Contains("hbar_omega_p_ev"),
                         validation_error);
    CHECK_THROWS_AS(load_material("/nonexistent.mat"), validation_error);
}

TEST_CASE("builtin scenarios") {
    for (const std::string& name : builtin_scenario_names()) {
        scenario s = builtin_scenario(name);
        CHECK_NOTHROW(s.validate());
        CHECK(s.models.size() == 3);
    }
    CHECK(builtin_scenario("trench-force").sphere.radius_m == 149.7e-6);
    CHECK(builtin_scenario("decca-pressure").sphere.radius_m == 151.2e-6);
    CHECK(builtin_scenario("afm-2011").sphere.radius_m == 41.3e-6);
    CHECK(builtin_scenario("afm-upgraded").sphere.radius_m == 43.47e-6);
    CHECK(builtin_scenario("au-ni").material2.mu_static == 110.0);
    CHECK(builtin_scenario("ni-ni").sphere.radius_m == 61.71e-6);
    CHECK_THROWS_AS(builtin_scenario("nope"), validation_error);
}

TEST_CASE("scenario file loading") {
    scenario s = load_scenario(data_path("scenarios/example-trench.scn"));
    CHECK(s.id == "example-trench");
    CHECK(s.geometry == geometry_kind::sphere_plate);
    CHECK(s.sphere.radius_m == 149.7e-6);
    CHECK(s.separations_m.size() == 4);
    CHECK(s.observable == observable_kind::force);
    CHECK(s.material1.hbar_omega_p_ev == 9.0);

    std::string no_radius = write_temp("scn_no_radius.scn",
                                       "id = x\ngeometry = sphere-plate\n"
                                       "material1 = gold-trench\nmaterial2 = gold-trench\n"
                                       "separations_m = 1e-6\nobservable = force\n");
    CHECK_THROWS_WITH_AS(load_scenario(no_radius), doctest::Contains("radius"),
                         validation_error);
    std::string dup = write_temp("scn_dup.scn",
                                 "id = x\ngeometry = plates\n"
                                 "material1 = gold-trench\nmaterial2 = gold-trench\n"
                                 "separations_m = 1e-6,1e-6\nobservable = pressure\n");
    CHECK_THROWS_WITH_AS(load_scenario(dup), doctest::Contains("duplicate"),
                         validation_error);
}

TEST_CASE("measured-point files") {
    auto pts = load_points(data_path("fixtures/ni-ni-synthetic.csv"));
    CHECK(pts.size() == 4);
    CHECK(pts[0].a_m == 2.5e-7);
    CHECK(pts[0].confidence == 95);
    CHECK(pts[0].err_minus > 0.0);
    std::string bad = write_temp("pts_bad.csv", "a,v\n1e-7,2,-1,1\n");
    CHECK_THROWS_AS(load_points(bad), validation_error);
}

TEST_CASE("zero-width uncertainties collapse the band") {
    scenario s = cheap_scenario();
    s.delta_omega_p = 0.0;
    s.delta_gamma = 0.0;
    auto rows = run_scenario(s);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].low == rows[0].central);
    CHECK(rows[0].high == rows[0].central);
}

TEST_CASE("bands never narrow when uncertainties grow") {
    scenario s = cheap_scenario();
    s.delta_omega_p = 0.005;
    s.delta_gamma = 0.0;
    auto narrow = run_scenario(s);
    s.delta_omega_p = 0.01;
    auto wide = run_scenario(s);
    CHECK(wide[0].low <= narrow[0].low);
    CHECK(wide[0].high >= narrow[0].high);
    CHECK(narrow[0].low <= narrow[0].central);
    CHECK(narrow[0].central <= narrow[0].high);
}

TEST_CASE("exports are deterministic and round-trip") {
    scenario s = cheap_scenario();
    auto rows = run_scenario(s);
    export_csv(rows, "/tmp/casimir_rows_1.csv");
    auto rows2 = run_scenario(s);
    export_csv(rows2, "/tmp/casimir_rows_2.csv");
    CHECK(slurp("/tmp/casimir_rows_1.csv") == slurp("/tmp/casimir_rows_2.csv"));

    std::ifstream in("/tmp/casimir_rows_1.csv");
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "a_m,model,central,low,high,measured,err_minus,err_plus,pass");
    REQUIRE(std::getline(in, line));
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double a;
    std::string model;
    double central;
    row >> a >> model >> central;
    CHECK(a == doctest::Approx(rows[0].a_m).epsilon(1e-9));
    CHECK(model == "drude");
    CHECK(central == doctest::Approx(rows[0].central).epsilon(1e-8));

    export_json(rows, "/tmp/casimir_rows.json");
    std::string json_text = slurp("/tmp/casimir_rows.json");
    CHECK(json_text.find("\"central\"") != std::string::npos);
    CHECK(json_text.find("\"model\": \"drude\"") != std::string::npos);
    std::remove("/tmp/casimir_rows_1.csv");
    std::remove("/tmp/casimir_rows_2.csv");
    std::remove("/tmp/casimir_rows.json");
}

TEST_CASE("band-overlap comparison") {
    // synthetic rows following an exact power law a^-3 between 1 and 3 um
    std::vector<comparison_row> rows;
    for (double a : {1e-6, 3e-6}) {
        comparison_row r;
        r.a_m = a;
        r.model = response_kind::drude;
        double v = -1e-12 * std::pow(1e-6 / a, 3.0);
        r.central = v;
        r.low = 1.02 * v;  // negative values: low is the more negative edge
        r.high = 0.98 * v;
        rows.push_back(r);
    }

    // touching arm end counts as overlap
    measured_point touch;
    touch.a_m = 1e-6;
    touch.value = -1.04e-12;
    touch.err_minus = 0.0;
    touch.err_plus = 0.02e-12;  // upper end exactly at the band edge
    auto sum1 = compare(rows, {touch});
    CHECK(sum1.total == 1);
    CHECK(sum1.passed == 1);

    // log-log interpolation is exact for a power law
    measured_point mid;
    mid.a_m = 2e-6;
    mid.value = -1e-12 / 8.0;
    mid.err_minus = 0.005e-12;
    mid.err_plus = 0.005e-12;
    auto sum2 = compare(rows, {mid});
    CHECK(sum2.passed == 1);

    // far-off points are excluded over their whole range
    measured_point off1 = mid, off2 = mid;
    off1.a_m = 1.5e-6;
    off1.value = -1e-11;
    off1.err_minus = off1.err_plus = 1e-13;
    off2.a_m = 2.5e-6;
    off2.value = -1e-11;
    off2.err_minus = off2.err_plus = 1e-13;
    auto sum3 = compare(rows, {off1, off2});
    CHECK(sum3.passed == 0);
    REQUIRE(sum3.excluded.size() == 1);
    CHECK(sum3.excluded[0].a_low == 1.5e-6);
    CHECK(sum3.excluded[0].a_high == 2.5e-6);

    CHECK_THROWS_AS(compare(rows, {}), validation_error);
}

TEST_CASE("synthetic fixture excludes the Drude band for magnetic plates") {
    scenario s = builtin_scenario("ni-ni");
    s.data = load_points(data_path("fixtures/ni-ni-synthetic.csv"));
    auto rows = run_scenario(s);
    int drude_fail = 0, nonlocal_pass = 0;
    for (const auto& r : rows) {
        if (!r.has_measured) continue;
        if (r.model == response_kind::drude && !r.pass) ++drude_fail;
        if (r.model == response_kind::nonlocal && r.pass) ++nonlocal_pass;
    }
    CHECK(drude_fail == 4);
    CHECK(nonlocal_pass == 4);
}

TEST_CASE("nonlocal bands stay close to plasma bands across the built-ins") {
    for (const std::string& name : builtin_scenario_names()) {
        scenario s = builtin_scenario(name);
        s.models = {response_kind::plasma, response_kind::nonlocal};
        auto rows = run_scenario(s);
        for (std::size_t i = 0; i < s.separations_m.size(); ++i) {
            const auto& plasma = rows[i];
            const auto& nonlocal = rows[s.separations_m.size() + i];
            REQUIRE(plasma.model == response_kind::plasma);
            REQUIRE(nonlocal.model == response_kind::nonlocal);
            double pad = 0.03 * std::abs(plasma.central);
            CHECK(nonlocal.low >= plasma.low - pad);
            CHECK(nonlocal.high <= plasma.high + pad);
        }
    }
}

TEST_CASE("velocity sweep plumbing") {
    auto res = sweep_velocity(builtin_material("gold-trench"), true, 500e-9, 300.0, 3);
    CHECK(res.sweep.size() == 3);
    CHECK(res.sweep.front().first == 0.0);
    CHECK(res.sweep.back().first ==
          doctest::Approx(10.0 * fermi_velocity(9.0)).epsilon(1e-12));
    CHECK(res.max_rel_change >= 0.0);
    CHECK_THROWS_AS(sweep_velocity(builtin_material("gold-trench"), true, 500e-9, 300.0, 1),
                    validation_error);
}

}  // TEST_SUITE
