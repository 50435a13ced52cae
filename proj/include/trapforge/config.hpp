#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trapforge/constants.hpp"
#include "trapforge/drive.hpp"
#include "trapforge/dynamics.hpp"
#include "trapforge/geometry.hpp"
#include "trapforge/noise.hpp"
#include "trapforge/spectrum.hpp"

// Run configuration: a JSON file with named sections in which every physical
// quantity carries an explicit unit suffix ("1.3 mm", "2.37 GHz"). Bare
// numbers are rejected for physical fields. Frequencies given in Hz-family
// units are angular: "2.37 GHz" parses to 2 pi x 2.37e9 rad/s.

namespace trapforge {

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Parses "value unit" for the given dimension; throws ConfigError with the
// field path on unknown units or missing suffixes.
double parse_quantity(const std::string& text, Dimension dimension,
                      const std::string& field);

struct GeometrySection {
    double inner_radius = 0.0;  // a [m]
    double outer_radius = 0.0;  // b [m]
    bool from_height = false;   // true when specified as (h, r)
    RingGeometry ring() const { return {inner_radius, outer_radius}; }
};

struct ScanSection {
    std::vector<double> q_electron;
    std::vector<double> q_ion;
    int periods = 300;
};

struct CoulombSection {
    double electron_energy = 1.602176634e-21;  // [J] (10 meV default)
    double t_end = 0.0;          // [s]; 0 -> 100 secular periods
    double orbit_radius = 0.0;   // [m]; 0 -> library default
};

struct DynamicsSection {
    int periods = 1000;
    int steps_per_period = 200;
    double escape_radius = 0.0;  // [m]; 0 -> 10 r0
    int record_stride = 1;
    std::string field_kind = "quadrupole";  // or "ring_axis"
    std::optional<ScanSection> scan;
    std::optional<CoulombSection> coulomb_check;
};

struct TuningSection {
    std::vector<double> amplitudes;  // [V]
    double reference = 0.0;          // [V]
    int state_index = 0;
};

struct QuantumSection {
    double core_charge = 2.0;
    double omega_au = 0.0;          // used when derive_from_drive is false
    bool derive_from_drive = false;
    int angular_momentum = 0;
    double box_radius_au = 0.0;
    BasisSpec basis;
    int levels = 60;
    int ladder_stride = 50;
    std::optional<TuningSection> tuning;
};

struct CollisionSection {
    double pressure = 0.0;         // [Pa]
    double gas_temperature = 0.0;  // [K]
    double gas_mass = 0.0;         // [kg]
    double cross_section = 0.0;    // [m^2]
};

struct NoiseSection {
    std::string preset_name;  // empty when an inline model is given
    std::optional<TrapModelPreset> inline_model;
    std::optional<CollisionSection> collision;
    const TrapModelPreset& model() const;
};

struct OutputSection {
    std::string directory = "out";
    std::vector<std::string> formats = {"csv"};
};

struct RunConfig {
    std::optional<GeometrySection> geometry;
    std::optional<DriveConfig> drive;
    std::vector<SpeciesState> species;
    std::optional<QuantumSection> quantum;
    std::optional<NoiseSection> noise;
    DynamicsSection dynamics;
    OutputSection output;
    TwoFreqThresholds thresholds;
    std::string config_hash;  // FNV-1a of the canonical form, hex
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

// Canonical serialization (SI base units, 17 significant digits); feeding it
// back through parse_config_text reproduces the same RunConfig.
std::string canonical_config(const RunConfig& config);

}  // namespace trapforge
