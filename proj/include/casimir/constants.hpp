#pragma once

// Physical constants (CODATA 2018) and the unit conversions used at the
// CLI boundary. Internally everything runs in SI: rad/s, m, kg, V.

namespace casimir::constants {

constexpr double hbar = 1.054571817e-34;   // J s
constexpr double c = 299792458.0;          // m/s
constexpr double eps0 = 8.8541878128e-12;  // F/m
constexpr double elementary_charge = 1.602176634e-19;  // C
constexpr double electron_mass = 9.1093837015e-31;     // kg
constexpr double pi = 3.14159265358979323846;

// photon energy in eV -> angular frequency in rad/s
constexpr double ev_to_rad_s = elementary_charge / hbar;  // 1.519...e15

constexpr double ev_to_omega(double ev) { return ev * ev_to_rad_s; }
constexpr double omega_to_ev(double omega) { return omega / ev_to_rad_s; }

constexpr double nm = 1e-9;  // m
constexpr double um = 1e-6;  // m

constexpr double per_cm3_to_per_m3(double n) { return n * 1e6; }
constexpr double ohm_cm_to_ohm_m(double rho) { return rho * 1e-2; }

// wavelength in m -> angular frequency in rad/s
constexpr double wavelength_to_omega(double lambda) { return 2.0 * pi * c / lambda; }

}  // namespace casimir::constants
