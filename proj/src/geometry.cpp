#include "casimir/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

double value_table::at(double a) const {
    if (a_m.size() < 2 || a_m.size() != value.size())
        throw validation_error("value_table: need at least two (a, value) rows");
    if (a < a_m.front() || a > a_m.back())
        throw std::out_of_range("value_table: separation outside table range");
    auto it = std::upper_bound(a_m.begin(), a_m.end(), a);
    if (it == a_m.end()) return value.back();
    std::size_t i = static_cast<std::size_t>(it - a_m.begin());
    double t = (a - a_m[i - 1]) / (a_m[i] - a_m[i - 1]);
    return value[i - 1] + t * (value[i] - value[i - 1]);
}

value_table load_value_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open table file: " + path);
    value_table tab;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double a, v;
        if (!(row >> a >> v)) {
            if (tab.a_m.empty()) continue;  // header line
            throw validation_error("bad row in table file " + path + ": " + line);
        }
        if (!tab.a_m.empty() && a <= tab.a_m.back())
            throw validation_error("table file " + path + ": separations must increase");
        tab.a_m.push_back(a);
        tab.value.push_back(v);
    }
    if (tab.a_m.size() < 2)
        throw validation_error("table file " + path + ": need at least two rows");
    return tab;
}

double sphere_plate_config::theta_at(double a) const {
    double th = 0.0;
    if (theta_table)
        th = theta_table->at(a);
    else if (theta_constant)
        th = *theta_constant;
    if (th > 0.0 || th < -1.0)
        throw validation_error("theta must lie in [-1, 0]");
    return th;
}

double sphere_plate_config::correction_at(double a) const {
    return correction_table ? correction_table->at(a) : 1.0;
}

void sphere_plate_config::validate() const {
    if (!(radius_m > 0.0)) throw validation_error("sphere radius must be > 0");
}

double effective_pressure(double force_gradient_n_per_m, double radius_m) {
    if (!(radius_m > 0.0)) throw validation_error("effective_pressure: radius must be > 0");
    return -force_gradient_n_per_m / (2.0 * pi * radius_m);
}

double pfa_force(double free_energy_per_area, double a_m, const sphere_plate_config& cfg) {
    cfg.validate();
    return 2.0 * pi * cfg.radius_m * free_energy_per_area * cfg.correction_at(a_m);
}

double force_gradient(double pressure_pa, double a_m, const sphere_plate_config& cfg) {
    cfg.validate();
    double bracket = 1.0 + cfg.theta_at(a_m) * a_m / cfg.radius_m;
    return -2.0 * pi * cfg.radius_m * pressure_pa * bracket;
}

double ideal_metal_pressure(double a_m) {
    if (!(a_m > 0.0)) throw validation_error("ideal_metal_pressure: separation must be > 0");
    double hbar_c_j_m = hbar_c_ev_m * ev_to_joule;
    double a2 = a_m * a_m;
    return -pi * pi * hbar_c_j_m / (240.0 * a2 * a2);
}

}  // namespace casimir
