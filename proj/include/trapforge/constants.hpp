#pragma once

#include <string>

// Physical constants (CODATA 2018) and SI <-> atomic-unit conversions shared
// by every module. All values are plain doubles in SI; atomic units are used
// internally by the radial eigensolver only.

namespace trapforge {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

struct PhysicalConstants {
    static constexpr double electron_mass = 9.1093837015e-31;       // kg
    static constexpr double elementary_charge = 1.602176634e-19;    // C
    static constexpr double planck = 6.62607015e-34;                // J s
    // Derived so that planck == two_pi * reduced_planck holds bitwise.
    static constexpr double reduced_planck = planck / two_pi;       // J s
    static constexpr double boltzmann = 1.380649e-23;               // J / K
    static constexpr double vacuum_permeability = 1.25663706212e-6; // H / m
    static constexpr double hartree_energy = 4.3597447222071e-18;   // J
    static constexpr double bohr_radius = 5.29177210903e-11;        // m
    static constexpr double au_time = reduced_planck / hartree_energy; // s

    // 1/(4 pi eps0), derived from the Hartree anchors.
    static constexpr double coulomb_constant =
        hartree_energy * bohr_radius / (elementary_charge * elementary_charge);

    static constexpr double atomic_mass_unit = 1.66053906660e-27;   // kg
};

enum class Dimension {
    length,
    frequency,
    angular_frequency,
    energy,
    temperature,
    voltage,
    resistivity,
    spectral_density,
    rate,
    time,
};

const char* dimension_name(Dimension d);

struct Quantity {
    double value = 0.0;
    Dimension dimension = Dimension::length;
};

// Supported dimensions: length, energy, angular_frequency, time.
// Throws std::invalid_argument naming the dimension otherwise.
Quantity si_to_au(const Quantity& q);
Quantity au_to_si(const Quantity& q);

// delta_s = sqrt(2 rho / (mu0 omega)); inputs must be positive.
double skin_depth(double resistivity, double angular_frequency);

}  // namespace trapforge
