#pragma once

#include <optional>
#include <string>
#include <vector>

namespace casimir {

// Two-column lookup table (separation in m, value), linear interpolation,
// throws outside the covered range.
struct value_table {
    std::vector<double> a_m;
    std::vector<double> value;

    double at(double a) const;
};

value_table load_value_table(const std::string& path);

// Sphere above a plate. theta is the leading curvature correction to the
// proximity-force gradient, nonpositive and at most 1 in magnitude;
// correction rescales the proximity-force sphere-plate force itself. Both
// default to the plain proximity result.
struct sphere_plate_config {
    double radius_m = 0.0;  // > 0
    std::optional<double> theta_constant;
    std::optional<value_table> theta_table;
    std::optional<value_table> correction_table;

    double theta_at(double a) const;       // 0 when unset
    double correction_at(double a) const;  // 1 when unset
    void validate() const;
};

// P_expt = -F'/(2 pi R), the pressure between plates inferred from a measured
// sphere-plate force gradient.
double effective_pressure(double force_gradient_n_per_m, double radius_m);

// F_sp = 2 pi R * (free energy per area) * correction.
double pfa_force(double free_energy_per_area, double a_m, const sphere_plate_config& cfg);

// F' = -2 pi R P (1 + theta a / R).
double force_gradient(double pressure_pa, double a_m, const sphere_plate_config& cfg);

// -pi^2 hbar c / (240 a^4), the zero-temperature perfect-reflector pressure.
double ideal_metal_pressure(double a_m);

}  // namespace casimir
