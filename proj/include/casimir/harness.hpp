#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "casimir/geometry.hpp"
#include "casimir/lifshitz.hpp"
#include "casimir/materials.hpp"

namespace casimir {

enum class geometry_kind { plates, sphere_plate };
enum class observable_kind { pressure, force, gradient };

// A measured observable at one separation, asymmetric error arms at the given
// confidence level (67 or 95 percent; metadata only).
struct measured_point {
    double a_m = 0.0;
    double value = 0.0;
    double err_minus = 0.0;
    double err_plus = 0.0;
    int confidence = 95;
};

struct scenario {
    std::string id;
    geometry_kind geometry = geometry_kind::plates;
    sphere_plate_config sphere;  // radius used for sphere_plate only
    material_spec material1;
    material_spec material2;
    std::vector<response_kind> models = {response_kind::drude, response_kind::plasma,
                                         response_kind::nonlocal};
    double temperature_k = 300.0;
    std::vector<double> separations_m;
    observable_kind observable = observable_kind::pressure;
    // relative half widths applied to hbar_omega_p and hbar_gamma of both
    // plates when building the theory band
    double delta_omega_p = 0.005;
    double delta_gamma = 0.05;
    std::vector<measured_point> data;

    void validate() const;
};

struct comparison_row {
    double a_m = 0.0;
    response_kind model = response_kind::drude;
    double central = 0.0;
    double low = 0.0;
    double high = 0.0;
    bool has_measured = false;
    measured_point measured;
    bool pass = false;
};

const char* model_name(response_kind model);
response_kind parse_model(const std::string& name);
std::vector<response_kind> parse_models(const std::string& csv);

// Shipped parameter sets: gold-decca, gold-trench, nickel.
material_spec builtin_material(const std::string& name);
std::vector<std::string> builtin_material_names();

// Shipped configurations: decca-pressure, trench-force, afm-2011,
// afm-upgraded, au-ni, ni-ni.
scenario builtin_scenario(const std::string& id);
std::vector<std::string> builtin_scenario_names();

// Key/value files; relative paths resolve against the file's directory.
material_spec load_material(const std::string& path);
scenario load_scenario(const std::string& path);
std::vector<measured_point> load_points(const std::string& path);

// Evaluates every (model, separation): central value plus the band spanned by
// the 2^m uncertainty corner evaluations. Measured points coinciding with a
// grid separation are attached with their overlap verdict. Rows come back
// sorted by (model, separation).
std::vector<comparison_row> run_scenario(const scenario& s, const lifshitz_spec& spec = {});

struct exclusion_range {
    response_kind model;
    double a_low;
    double a_high;
};

struct compare_summary {
    int total = 0;
    int passed = 0;
    std::vector<exclusion_range> excluded;  // maximal runs of failing points
};

// Closed-interval overlap test of each point against the theory band,
// log-log interpolating the band edges between grid separations.
compare_summary compare(std::vector<comparison_row>& rows,
                        const std::vector<measured_point>& points);

void export_csv(const std::vector<comparison_row>& rows, const std::string& path);
void export_json(const std::vector<comparison_row>& rows, const std::string& path);

// Pressure sweeps behind the sensitivity claim: one nonlocal velocity varies,
// the other stays at its default.
struct sensitivity_result {
    std::vector<std::pair<double, double>> sweep;  // (velocity m/s, pressure Pa)
    double max_rel_change = 0.0;  // spread relative to the default-velocity value
};

sensitivity_result sweep_velocity(const material_spec& base, bool longitudinal,
                                  double a_m, double temperature_k, int n_points = 6,
                                  const lifshitz_spec& spec = {});

}  // namespace casimir
