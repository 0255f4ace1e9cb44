#pragma once

// Physical constants. All spectral quantities in this library are energies
// in eV (hbar*omega); lengths are meters. The single conversion constant
// between the two worlds is hbar_c below.

namespace casimir {

inline constexpr double pi = 3.14159265358979323846;

inline constexpr double speed_of_light = 2.99792458e8;     // m/s
inline constexpr double hbar_c_ev_m = 197.3269804e-9;      // eV*m
inline constexpr double hbar_ev_s = hbar_c_ev_m / speed_of_light;  // eV*s
inline constexpr double k_boltzmann_ev = 8.617333e-5;      // eV/K
inline constexpr double k_boltzmann_j = 1.380649e-23;      // J/K
inline constexpr double electron_rest_energy_ev = 510998.95;  // m_e c^2
inline constexpr double ev_to_joule = 1.602176634e-19;

}  // namespace casimir
