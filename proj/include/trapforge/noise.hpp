#pragma once

#include <string>
#include <vector>

// Decoherence and heating budget: spectral densities (black-body surface,
// Johnson-Nyquist, tabulated adatom and roughness terms), heating and
// temperature rates, and the background-gas collision rate.

namespace trapforge {

struct TrapModelPreset {
    std::string name;
    double electrode_temperature = 0.0;      // T_e [K]
    double circuit_temperature = 0.0;        // T_c [K]
    double electrode_resistivity = 0.0;      // rho_e [Ohm m]
    double circuit_resistance = 0.0;         // R at omega_e [Ohm]
    double height = 0.0;                     // d [m]
    double secular_omega = 0.0;              // omega_e [rad/s]
    double adatom_spectral_density = 0.0;    // tabulated [V^2 m^-2 s]
    double roughness_spectral_density = 0.0; // tabulated [V^2 m^-2 s]
    double surface_fluct = 2.0;              // s_eta in {0.5, 1, 2}
};

void validate_preset(const TrapModelPreset& preset);

// Bundled trap models: copper-300K, copper-0.4K, ybco-93K. The cryogenic
// circuit resistances and the YBCO effective resistivity are effective
// values fitted to the reference noise table for each model.
const std::vector<TrapModelPreset>& builtin_presets();
const TrapModelPreset& find_preset(const std::string& name);

// Preset file: a JSON array of records carrying all TrapModelPreset fields
// with explicit unit suffixes (see presets/trap_models.json).
std::vector<TrapModelPreset> load_presets_file(const std::string& path);

// Black-body surface spectral density
// k_B T rho / (2 pi d^3) (s_eta + d/delta_s). Appends a warning when the
// classical condition k_B T >> hbar omega fails (ratio below 100).
double s_bbs(double electrode_temperature, double electrode_resistivity,
             double height, double omega, double surface_fluct,
             std::vector<std::string>* warnings = nullptr);

// Johnson-Nyquist spectral density 4 k_B T_c R / d^2.
double s_jn(double circuit_temperature, double circuit_resistance,
            double height);

// Ground-state heating rate Gamma0 = e^2 S_E / (4 m_e hbar omega).
double ground_state_heating_rate(double spectral_density, double omega);

// Occupied-state rate 2 nbar Gamma0.
double scaled_heating_rate(double nbar, double spectral_density, double omega);

// Tdot = Gamma hbar omega / k_B.
double temperature_rate(double quanta_rate, double omega);

struct NoiseSourceEntry {
    std::string source;            // BBS | JN | SAd | SR
    double spectral_density = 0.0; // [V^2 m^-2 s]
    double quanta_rate = 0.0;      // Gamma0 [1/s]
    double temperature_rate = 0.0; // [K/s]
};

struct NoiseBudget {
    std::vector<NoiseSourceEntry> sources;
    std::vector<std::string> warnings;
    double total_spectral_density = 0.0;
    double total_quanta_rate = 0.0;
    double total_temperature_rate = 0.0;
};

NoiseBudget budget(const TrapModelPreset& preset);

// Gamma0 applied to the summed spectral density at the preset's omega_e.
double combined_cryogenic_rate(const TrapModelPreset& preset);

// n sigma v_rel with n = P/(k_B T) and the mean relative thermal speed of
// the electron-gas pair, sqrt(8 k_B T / (pi mu)).
double collision_rate(double pressure, double gas_temperature, double gas_mass,
                      double cross_section);

}  // namespace trapforge
