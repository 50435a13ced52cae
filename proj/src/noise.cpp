#include "trapforge/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "trapforge/constants.hpp"

namespace trapforge {

using pc = PhysicalConstants;

void validate_preset(const TrapModelPreset& p) {
    if (!(p.electrode_temperature > 0.0) || !(p.circuit_temperature > 0.0))
        throw std::domain_error("TrapModelPreset: temperatures must be > 0");
    if (!(p.electrode_resistivity > 0.0))
        throw std::domain_error("TrapModelPreset: resistivity must be > 0");
    if (p.circuit_resistance < 0.0)
        throw std::domain_error("TrapModelPreset: resistance must be >= 0");
    if (!(p.height > 0.0))
        throw std::domain_error("TrapModelPreset: height must be > 0");
    if (!(p.secular_omega > 0.0))
        throw std::domain_error("TrapModelPreset: secular omega must be > 0");
    if (p.adatom_spectral_density < 0.0 || p.roughness_spectral_density < 0.0)
        throw std::domain_error(
            "TrapModelPreset: spectral densities must be >= 0");
    if (p.surface_fluct != 0.5 && p.surface_fluct != 1.0 &&
        p.surface_fluct != 2.0)
        throw std::domain_error("TrapModelPreset: s_eta must be 0.5, 1 or 2");
}

const std::vector<TrapModelPreset>& builtin_presets() {
    static const std::vector<TrapModelPreset> presets = {
        {"copper-300K", 300.0, 300.0, 2.4e-8, 1.04, 1.68e-3,
         two_pi * 7.3e6, 8.0e-18, 1.2e-30, 2.0},
        // Residual resistivity of sputtered copper; circuit resistance is an
        // effective value for this model.
        {"copper-0.4K", 0.4, 0.4, 9.3e-9, 0.44463, 1.78e-3,
         two_pi * 8.8e6, 7.0e-21, 5.6e-28, 2.0},
        // Both the resistance and the resistivity are effective fitted
        // values; YBCO below T_c has no meaningful dc resistivity.
        {"ybco-93K", 93.0, 93.0, 1.524e-8, 6.441e-3, 1.95e-3,
         two_pi * 18.8e6, 5.4e-19, 0.78e-30, 2.0},
    };
    return presets;
}

const TrapModelPreset& find_preset(const std::string& name) {
    for (const auto& p : builtin_presets())
        if (p.name == name) return p;
    std::string known;
    for (const auto& p : builtin_presets())
        known += (known.empty() ? "" : ", ") + p.name;
    throw std::invalid_argument("unknown preset '" + name +
                                "'; available: " + known);
}

double s_bbs(double temperature, double resistivity, double height,
             double omega, double surface_fluct,
             std::vector<std::string>* warnings) {
    if (!(temperature > 0.0) || !(resistivity > 0.0) || !(height > 0.0) ||
        !(omega > 0.0))
        throw std::domain_error("s_bbs: inputs must be positive");
    const double ratio = pc::boltzmann * temperature / (pc::reduced_planck * omega);
    if (ratio < 100.0 && warnings)
        warnings->push_back(
            "s_bbs: k_B T / (hbar omega) = " + std::to_string(ratio) +
            " < 100; classical black-body form is marginal");
    const double delta = skin_depth(resistivity, omega);
    return pc::boltzmann * temperature * resistivity /
           (two_pi * height * height * height) *
           (surface_fluct + height / delta);
}

double s_jn(double circuit_temperature, double circuit_resistance,
            double height) {
    if (!(circuit_temperature > 0.0) || !(height > 0.0))
        throw std::domain_error("s_jn: temperature and height must be positive");
    if (circuit_resistance < 0.0)
        throw std::domain_error("s_jn: resistance must be >= 0");
    return 4.0 * pc::boltzmann * circuit_temperature * circuit_resistance /
           (height * height);
}

double ground_state_heating_rate(double spectral_density, double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("ground_state_heating_rate: require omega > 0");
    if (spectral_density < 0.0)
        throw std::domain_error("ground_state_heating_rate: require S_E >= 0");
    return pc::elementary_charge * pc::elementary_charge * spectral_density /
           (4.0 * pc::electron_mass * pc::reduced_planck * omega);
}

double scaled_heating_rate(double nbar, double spectral_density, double omega) {
    return 2.0 * nbar * ground_state_heating_rate(spectral_density, omega);
}

double temperature_rate(double quanta_rate, double omega) {
    if (!(omega > 0.0))
        throw std::domain_error("temperature_rate: require omega > 0");
    return quanta_rate * pc::reduced_planck * omega / pc::boltzmann;
}

NoiseBudget budget(const TrapModelPreset& preset) {
    validate_preset(preset);
    NoiseBudget out;
    const double omega = preset.secular_omega;

    auto add = [&](const std::string& name, double s) {
        NoiseSourceEntry entry;
        entry.source = name;
        entry.spectral_density = s;
        entry.quanta_rate = ground_state_heating_rate(s, omega);
        entry.temperature_rate = temperature_rate(entry.quanta_rate, omega);
        out.sources.push_back(entry);
    };
    add("BBS", s_bbs(preset.electrode_temperature, preset.electrode_resistivity,
                     preset.height, omega, preset.surface_fluct, &out.warnings));
    add("JN", s_jn(preset.circuit_temperature, preset.circuit_resistance,
                   preset.height));
    add("SAd", preset.adatom_spectral_density);
    add("SR", preset.roughness_spectral_density);

    for (const auto& s : out.sources) {
        out.total_spectral_density += s.spectral_density;
        out.total_quanta_rate += s.quanta_rate;
        out.total_temperature_rate += s.temperature_rate;
    }
    return out;
}

double combined_cryogenic_rate(const TrapModelPreset& preset) {
    const NoiseBudget b = budget(preset);
    return ground_state_heating_rate(b.total_spectral_density,
                                     preset.secular_omega);
}

double collision_rate(double pressure, double gas_temperature, double gas_mass,
                      double cross_section) {
    if (!(pressure > 0.0) || !(gas_temperature > 0.0) || !(gas_mass > 0.0))
        throw std::domain_error("collision_rate: inputs must be positive");
    if (cross_section < 0.0)
        throw std::domain_error("collision_rate: cross section must be >= 0");
    const double density = pressure / (pc::boltzmann * gas_temperature);
    const double reduced_mass =
        pc::electron_mass * gas_mass / (pc::electron_mass + gas_mass);
    const double mean_speed =
        std::sqrt(8.0 * pc::boltzmann * gas_temperature / (pi * reduced_mass));
    return density * cross_section * mean_speed;
}

}  // namespace trapforge
