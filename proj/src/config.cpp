#include "trapforge/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "trapforge/constants.hpp"

namespace trapforge {

using nlohmann::json;
using pc = PhysicalConstants;

namespace {

const std::map<std::string, double>& unit_table(Dimension d) {
    static const std::map<std::string, double> length = {
        {"m", 1.0},   {"cm", 1e-2}, {"mm", 1e-3},          {"um", 1e-6},
        {"µm", 1e-6}, {"nm", 1e-9}, {"a0", pc::bohr_radius}, {"bohr", pc::bohr_radius},
    };
    static const std::map<std::string, double> voltage = {
        {"V", 1.0}, {"kV", 1e3}, {"mV", 1e-3}, {"uV", 1e-6},
    };
    // Hz-family entries are angular: "1 Hz" -> 2 pi rad/s.
    static const std::map<std::string, double> angular = {
        {"rad/s", 1.0},     {"Hz", two_pi},     {"kHz", two_pi * 1e3},
        {"MHz", two_pi * 1e6}, {"GHz", two_pi * 1e9},
        {"au", 1.0 / pc::au_time},
    };
    static const std::map<std::string, double> time_units = {
        {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"ns", 1e-9},
    };
    static const std::map<std::string, double> temperature = {
        {"K", 1.0}, {"mK", 1e-3}, {"uK", 1e-6},
    };
    static const std::map<std::string, double> resistivity = {
        {"Ohm.m", 1.0}, {"Ohm*m", 1.0}, {"Ohm m", 1.0},
    };
    static const std::map<std::string, double> spectral = {
        {"V^2/m^2/Hz", 1.0}, {"V^2.s/m^2", 1.0}, {"V2m-2s", 1.0},
    };
    static const std::map<std::string, double> energy = {
        {"J", 1.0},
        {"eV", pc::elementary_charge},
        {"meV", 1e-3 * pc::elementary_charge},
        {"Eh", pc::hartree_energy},
        {"hartree", pc::hartree_energy},
    };
    static const std::map<std::string, double> rate = {
        {"1/s", 1.0},
    };
    static const std::map<std::string, double> frequency = {
        {"cycles/s", 1.0},
    };
    switch (d) {
        case Dimension::length: return length;
        case Dimension::voltage: return voltage;
        case Dimension::angular_frequency: return angular;
        case Dimension::time: return time_units;
        case Dimension::temperature: return temperature;
        case Dimension::resistivity: return resistivity;
        case Dimension::spectral_density: return spectral;
        case Dimension::energy: return energy;
        case Dimension::rate: return rate;
        case Dimension::frequency: return frequency;
    }
    throw std::logic_error("unit_table: unknown dimension");
}

// Extra stand-alone tables for quantities outside the Quantity dimensions.
const std::map<std::string, double>& extra_table(const std::string& kind) {
    static const std::map<std::string, double> resistance = {
        {"Ohm", 1.0}, {"mOhm", 1e-3}, {"uOhm", 1e-6},
    };
    static const std::map<std::string, double> mass = {
        {"kg", 1.0}, {"u", pc::atomic_mass_unit}, {"m_e", pc::electron_mass},
    };
    static const std::map<std::string, double> velocity = {
        {"m/s", 1.0}, {"km/s", 1e3},
    };
    static const std::map<std::string, double> angle = {
        {"rad", 1.0}, {"deg", pi / 180.0},
    };
    static const std::map<std::string, double> area = {
        {"m^2", 1.0}, {"cm^2", 1e-4},
    };
    static const std::map<std::string, double> pressure = {
        {"Pa", 1.0}, {"mbar", 100.0},
    };
    if (kind == "resistance") return resistance;
    if (kind == "mass") return mass;
    if (kind == "velocity") return velocity;
    if (kind == "angle") return angle;
    if (kind == "area") return area;
    if (kind == "pressure") return pressure;
    throw std::logic_error("extra_table: unknown kind " + kind);
}

double parse_with_table(const std::string& text,
                        const std::map<std::string, double>& table,
                        const std::string& field) {
    const auto split = text.find(' ');
    if (split == std::string::npos)
        throw ConfigError(field + ": physical quantity '" + text +
                          "' must carry a unit suffix");
    const std::string unit = text.substr(split + 1);
    const auto it = table.find(unit);
    if (it == table.end())
        throw ConfigError(field + ": unknown unit suffix '" + unit + "'");
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text.substr(0, split), &consumed);
    } catch (const std::exception&) {
        throw ConfigError(field + ": cannot parse number in '" + text + "'");
    }
    if (consumed != split)
        throw ConfigError(field + ": cannot parse number in '" + text + "'");
    return value * it->second;
}

double quantity_field(const json& node, const std::string& key,
                      Dimension dimension, const std::string& section) {
    const std::string field = section + "." + key;
    if (!node.contains(key)) throw ConfigError(field + ": missing");
    const auto& v = node.at(key);
    if (!v.is_string())
        throw ConfigError(field +
                          ": physical quantities must be strings with units");
    return parse_with_table(v.get<std::string>(), unit_table(dimension), field);
}

double extra_field(const json& node, const std::string& key,
                   const std::string& kind, const std::string& section) {
    const std::string field = section + "." + key;
    if (!node.contains(key)) throw ConfigError(field + ": missing");
    const auto& v = node.at(key);
    if (!v.is_string())
        throw ConfigError(field +
                          ": physical quantities must be strings with units");
    return parse_with_table(v.get<std::string>(), extra_table(kind), field);
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

GeometrySection parse_geometry(const json& node) {
    const bool has_radii = node.contains("a") || node.contains("b");
    const bool has_height = node.contains("h") || node.contains("r");
    if (has_radii && has_height)
        throw ConfigError(
            "geometry: give either (a, b) or (h, r), not both");
    if (!has_radii && !has_height)
        throw ConfigError("geometry: give either (a, b) or (h, r)");

    GeometrySection g;
    if (has_radii) {
        g.inner_radius = quantity_field(node, "a", Dimension::length, "geometry");
        g.outer_radius = quantity_field(node, "b", Dimension::length, "geometry");
    } else {
        const double h = quantity_field(node, "h", Dimension::length, "geometry");
        if (!node.contains("r") || !node.at("r").is_number())
            throw ConfigError("geometry.r: missing or not a number");
        const double r = node.at("r").get<double>();
        g.inner_radius = inner_radius_for_height(h, r);
        g.outer_radius = r * g.inner_radius;
        g.from_height = true;
    }
    if (!(g.outer_radius > g.inner_radius) || !(g.inner_radius > 0.0))
        throw ConfigError("geometry: require b > a > 0");
    return g;
}

DriveConfig parse_drive(const json& node) {
    DriveConfig d;
    d.electron_amplitude =
        quantity_field(node, "V_e0", Dimension::voltage, "drive");
    d.electron_omega =
        quantity_field(node, "Omega_e", Dimension::angular_frequency, "drive");
    d.ion_amplitude = quantity_field(node, "V_I0", Dimension::voltage, "drive");
    d.ion_omega =
        quantity_field(node, "Omega_I", Dimension::angular_frequency, "drive");
    if (node.contains("phi"))
        d.phase = extra_field(node, "phi", "angle", "drive");
    validate_drive(d);
    return d;
}

Vec3 parse_vec3(const json& node, const std::string& key,
                const std::string& kind, const std::string& section) {
    const std::string field = section + "." + key;
    if (!node.contains(key)) return {0.0, 0.0, 0.0};
    const auto& arr = node.at(key);
    if (!arr.is_array() || arr.size() != 3)
        throw ConfigError(field + ": expected an array of three quantities");
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        if (!arr[i].is_string())
            throw ConfigError(field + ": components must carry units");
        const auto& table = kind == "velocity"
                                ? extra_table("velocity")
                                : unit_table(Dimension::length);
        out[i] = parse_with_table(arr[i].get<std::string>(), table, field);
    }
    return out;
}

SpeciesState parse_species(const json& node, int index) {
    const std::string section = "species[" + std::to_string(index) + "]";
    SpeciesState s;
    if (!node.contains("label") || !node.at("label").is_string())
        throw ConfigError(section + ".label: missing");
    s.label = node.at("label").get<std::string>();

    if (s.label == "electron") {
        s.mass = pc::electron_mass;
        s.charge = -pc::elementary_charge;
    } else if (s.label == "Ca+" || s.label == "Ca2+") {
        s.mass = 40.0 * pc::atomic_mass_unit;
        s.charge = (s.label == "Ca+" ? 1.0 : 2.0) * pc::elementary_charge;
    }
    if (node.contains("mass"))
        s.mass = extra_field(node, "mass", "mass", section);
    if (node.contains("charge_e")) {
        if (!node.at("charge_e").is_number())
            throw ConfigError(section + ".charge_e: expected a number (units of e)");
        s.charge = node.at("charge_e").get<double>() * pc::elementary_charge;
    }
    if (!(s.mass > 0.0))
        throw ConfigError(section + ": unknown species '" + s.label +
                          "'; give mass and charge_e explicitly");
    s.position = parse_vec3(node, "position", "length", section);
    s.velocity = parse_vec3(node, "velocity", "velocity", section);
    return s;
}

BasisSpec parse_basis(const json& node, const std::string& section) {
    BasisSpec b;
    if (node.contains("order")) b.order = node.at("order").get<int>();
    if (node.contains("count")) b.count = node.at("count").get<int>();
    if (node.contains("knots")) {
        const std::string layout = node.at("knots").get<std::string>();
        if (layout == "linear")
            b.layout = KnotLayout::linear;
        else if (layout == "geometric")
            b.layout = KnotLayout::geometric;
        else if (layout == "mixed")
            b.layout = KnotLayout::mixed;
        else
            throw ConfigError(section + ".basis.knots: unknown layout '" +
                              layout + "'");
    }
    return b;
}

// Values suffixed " au" are stored directly in atomic units; the generic unit
// path would round-trip through SI and lose the last bit.
bool parse_au_direct(const json& node, const std::string& key,
                     const std::string& field, double* out) {
    if (!node.contains(key)) return false;
    const auto& v = node.at(key);
    if (!v.is_string())
        throw ConfigError(field + ": physical quantities must be strings with units");
    const std::string text = v.get<std::string>();
    if (text.size() < 3 || text.substr(text.size() - 3) != " au") return false;
    try {
        *out = std::stod(text.substr(0, text.size() - 3));
    } catch (const std::exception&) {
        throw ConfigError(field + ": cannot parse number in '" + text + "'");
    }
    return true;
}

QuantumSection parse_quantum(const json& node) {
    QuantumSection q;
    if (node.contains("Z")) q.core_charge = node.at("Z").get<double>();
    const bool has_omega = node.contains("omega");
    const bool derive = node.contains("derive_from_drive") &&
                        node.at("derive_from_drive").get<bool>();
    if (has_omega == derive)
        throw ConfigError(
            "quantum: give exactly one of omega or derive_from_drive");
    q.derive_from_drive = derive;
    if (has_omega && !parse_au_direct(node, "omega", "quantum.omega", &q.omega_au)) {
        const double omega_si =
            quantity_field(node, "omega", Dimension::angular_frequency, "quantum");
        q.omega_au = si_to_au({omega_si, Dimension::angular_frequency}).value;
    }
    if (node.contains("ell")) q.angular_momentum = node.at("ell").get<int>();
    if (node.contains("R_max") &&
        !parse_au_direct(node, "R_max", "quantum.R_max", &q.box_radius_au)) {
        const double r = quantity_field(node, "R_max", Dimension::length, "quantum");
        q.box_radius_au = si_to_au({r, Dimension::length}).value;
    }
    if (node.contains("basis")) q.basis = parse_basis(node.at("basis"), "quantum");
    if (node.contains("levels")) q.levels = node.at("levels").get<int>();
    if (node.contains("ladder_stride"))
        q.ladder_stride = node.at("ladder_stride").get<int>();
    if (node.contains("tuning")) {
        const auto& t = node.at("tuning");
        TuningSection ts;
        if (!t.contains("V_grid") || !t.at("V_grid").is_array())
            throw ConfigError("quantum.tuning.V_grid: missing array");
        for (const auto& v : t.at("V_grid"))
            ts.amplitudes.push_back(parse_with_table(
                v.get<std::string>(), unit_table(Dimension::voltage),
                "quantum.tuning.V_grid"));
        ts.reference =
            quantity_field(t, "V_ref", Dimension::voltage, "quantum.tuning");
        ts.state_index = t.at("state_index").get<int>();
        q.tuning = ts;
    }
    return q;
}

TrapModelPreset parse_inline_model(const json& node) {
    TrapModelPreset m;
    const std::string s = "noise.model";
    m.name = node.contains("name") ? node.at("name").get<std::string>()
                                   : std::string("custom");
    m.electrode_temperature =
        quantity_field(node, "T_e", Dimension::temperature, s);
    m.circuit_temperature =
        node.contains("T_c")
            ? quantity_field(node, "T_c", Dimension::temperature, s)
            : m.electrode_temperature;
    m.electrode_resistivity =
        quantity_field(node, "rho_e", Dimension::resistivity, s);
    m.circuit_resistance = extra_field(node, "R", "resistance", s);
    m.height = quantity_field(node, "d", Dimension::length, s);
    m.secular_omega =
        quantity_field(node, "omega_e", Dimension::angular_frequency, s);
    m.adatom_spectral_density =
        quantity_field(node, "S_adatom", Dimension::spectral_density, s);
    m.roughness_spectral_density =
        quantity_field(node, "S_roughness", Dimension::spectral_density, s);
    if (node.contains("s_eta")) m.surface_fluct = node.at("s_eta").get<double>();
    validate_preset(m);
    return m;
}

NoiseSection parse_noise(const json& node) {
    NoiseSection n;
    const bool has_preset = node.contains("preset");
    const bool has_model = node.contains("model");
    const bool has_file = node.contains("preset_file");
    const bool valid = (has_model && !has_preset && !has_file) ||
                       (!has_model && has_preset);
    if (!valid)
        throw ConfigError(
            "noise: give exactly one of preset, preset_file + preset, or model");
    if (has_file) {
        const auto models =
            load_presets_file(node.at("preset_file").get<std::string>());
        const std::string wanted = node.at("preset").get<std::string>();
        for (const auto& m : models)
            if (m.name == wanted) n.inline_model = m;
        if (!n.inline_model)
            throw ConfigError("noise.preset: '" + wanted +
                              "' not found in the preset file");
    } else if (has_preset) {
        n.preset_name = node.at("preset").get<std::string>();
        try {
            find_preset(n.preset_name);
        } catch (const std::invalid_argument& err) {
            throw ConfigError(std::string("noise.preset: ") + err.what());
        }
    } else {
        n.inline_model = parse_inline_model(node.at("model"));
    }
    if (node.contains("collision")) {
        const auto& c = node.at("collision");
        CollisionSection cs;
        cs.pressure = extra_field(c, "pressure", "pressure", "noise.collision");
        cs.gas_temperature =
            quantity_field(c, "T", Dimension::temperature, "noise.collision");
        cs.gas_mass = extra_field(c, "gas_mass", "mass", "noise.collision");
        cs.cross_section =
            extra_field(c, "cross_section", "area", "noise.collision");
        n.collision = cs;
    }
    return n;
}

DynamicsSection parse_dynamics(const json& node) {
    DynamicsSection d;
    if (node.contains("periods")) d.periods = node.at("periods").get<int>();
    if (node.contains("steps_per_period"))
        d.steps_per_period = node.at("steps_per_period").get<int>();
    if (node.contains("record_stride"))
        d.record_stride = node.at("record_stride").get<int>();
    if (node.contains("field")) {
        d.field_kind = node.at("field").get<std::string>();
        if (d.field_kind != "quadrupole" && d.field_kind != "ring_axis")
            throw ConfigError("dynamics.field: unknown field model '" +
                              d.field_kind + "'");
    }
    if (node.contains("escape_radius"))
        d.escape_radius =
            quantity_field(node, "escape_radius", Dimension::length, "dynamics");
    if (node.contains("scan")) {
        const auto& sc = node.at("scan");
        ScanSection s;
        for (const auto& v : sc.at("q_e")) s.q_electron.push_back(v.get<double>());
        for (const auto& v : sc.at("q_I")) s.q_ion.push_back(v.get<double>());
        if (sc.contains("periods")) s.periods = sc.at("periods").get<int>();
        d.scan = s;
    }
    if (node.contains("coulomb_check")) {
        const auto& cc = node.at("coulomb_check");
        CoulombSection c;
        if (cc.contains("energy"))
            c.electron_energy = quantity_field(cc, "energy", Dimension::energy,
                                               "dynamics.coulomb_check");
        if (cc.contains("t_end"))
            c.t_end = quantity_field(cc, "t_end", Dimension::time,
                                     "dynamics.coulomb_check");
        if (cc.contains("orbit_radius"))
            c.orbit_radius = quantity_field(cc, "orbit_radius", Dimension::length,
                                            "dynamics.coulomb_check");
        d.coulomb_check = c;
    }
    return d;
}

std::string format_si(double value, const char* unit) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g %s", value, unit);
    return buf;
}

}  // namespace

const TrapModelPreset& NoiseSection::model() const {
    if (inline_model) return *inline_model;
    return find_preset(preset_name);
}

RunConfig parse_config_text(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("config: invalid JSON: ") + err.what());
    }
    if (!root.is_object()) throw ConfigError("config: top level must be an object");

    RunConfig cfg;
    try {
        if (root.contains("geometry"))
            cfg.geometry = parse_geometry(root.at("geometry"));
        if (root.contains("drive")) cfg.drive = parse_drive(root.at("drive"));
        if (root.contains("species")) {
            int i = 0;
            for (const auto& s : root.at("species"))
                cfg.species.push_back(parse_species(s, i++));
        }
        if (root.contains("quantum"))
            cfg.quantum = parse_quantum(root.at("quantum"));
        if (root.contains("noise")) cfg.noise = parse_noise(root.at("noise"));
        if (root.contains("dynamics"))
            cfg.dynamics = parse_dynamics(root.at("dynamics"));
        if (root.contains("output")) {
            const auto& o = root.at("output");
            if (o.contains("directory"))
                cfg.output.directory = o.at("directory").get<std::string>();
            if (o.contains("formats")) {
                cfg.output.formats.clear();
                for (const auto& f : o.at("formats"))
                    cfg.output.formats.push_back(f.get<std::string>());
            }
        }
    } catch (const json::exception& err) {
        throw ConfigError(std::string("config: ") + err.what());
    }
    if (cfg.quantum && cfg.quantum->derive_from_drive && !cfg.drive)
        throw ConfigError(
            "quantum.derive_from_drive requires a drive section");
    cfg.config_hash = fnv1a_hex(canonical_config(cfg));
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string canonical_config(const RunConfig& cfg) {
    json root = json::object();
    if (cfg.geometry) {
        root["geometry"] = {
            {"a", format_si(cfg.geometry->inner_radius, "m")},
            {"b", format_si(cfg.geometry->outer_radius, "m")},
        };
    }
    if (cfg.drive) {
        root["drive"] = {
            {"V_e0", format_si(cfg.drive->electron_amplitude, "V")},
            {"Omega_e", format_si(cfg.drive->electron_omega, "rad/s")},
            {"V_I0", format_si(cfg.drive->ion_amplitude, "V")},
            {"Omega_I", format_si(cfg.drive->ion_omega, "rad/s")},
            {"phi", format_si(cfg.drive->phase, "rad")},
        };
    }
    if (!cfg.species.empty()) {
        json list = json::array();
        for (const auto& s : cfg.species) {
            json node = {
                {"label", s.label},
                {"mass", format_si(s.mass, "kg")},
                {"charge_e", s.charge / pc::elementary_charge},
                {"position",
                 {format_si(s.position[0], "m"), format_si(s.position[1], "m"),
                  format_si(s.position[2], "m")}},
                {"velocity",
                 {format_si(s.velocity[0], "m/s"),
                  format_si(s.velocity[1], "m/s"),
                  format_si(s.velocity[2], "m/s")}},
            };
            list.push_back(node);
        }
        root["species"] = list;
    }
    if (cfg.quantum) {
        const auto& q = *cfg.quantum;
        json node = {
            {"Z", q.core_charge},
            {"ell", q.angular_momentum},
            {"levels", q.levels},
            {"ladder_stride", q.ladder_stride},
            {"basis",
             {{"order", q.basis.order},
              {"count", q.basis.count},
              {"knots", q.basis.layout == KnotLayout::linear      ? "linear"
                        : q.basis.layout == KnotLayout::geometric ? "geometric"
                                                                  : "mixed"}}},
        };
        if (q.derive_from_drive)
            node["derive_from_drive"] = true;
        else
            node["omega"] = format_si(q.omega_au, "au");
        if (q.box_radius_au > 0.0)
            node["R_max"] = format_si(q.box_radius_au, "au");
        if (q.tuning) {
            json grid = json::array();
            for (double v : q.tuning->amplitudes)
                grid.push_back(format_si(v, "V"));
            node["tuning"] = {{"V_grid", grid},
                              {"V_ref", format_si(q.tuning->reference, "V")},
                              {"state_index", q.tuning->state_index}};
        }
        root["quantum"] = node;
    }
    if (cfg.noise) {
        json node = json::object();
        if (cfg.noise->inline_model) {
            const auto& m = *cfg.noise->inline_model;
            node["model"] = {
                {"name", m.name},
                {"T_e", format_si(m.electrode_temperature, "K")},
                {"T_c", format_si(m.circuit_temperature, "K")},
                {"rho_e", format_si(m.electrode_resistivity, "Ohm.m")},
                {"R", format_si(m.circuit_resistance, "Ohm")},
                {"d", format_si(m.height, "m")},
                {"omega_e", format_si(m.secular_omega, "rad/s")},
                {"S_adatom",
                 format_si(m.adatom_spectral_density, "V^2/m^2/Hz")},
                {"S_roughness",
                 format_si(m.roughness_spectral_density, "V^2/m^2/Hz")},
                {"s_eta", m.surface_fluct},
            };
        } else {
            node["preset"] = cfg.noise->preset_name;
        }
        if (cfg.noise->collision) {
            const auto& c = *cfg.noise->collision;
            node["collision"] = {
                {"pressure", format_si(c.pressure, "Pa")},
                {"T", format_si(c.gas_temperature, "K")},
                {"gas_mass", format_si(c.gas_mass, "kg")},
                {"cross_section", format_si(c.cross_section, "m^2")},
            };
        }
        root["noise"] = node;
    }
    {
        json node = {
            {"periods", cfg.dynamics.periods},
            {"steps_per_period", cfg.dynamics.steps_per_period},
            {"record_stride", cfg.dynamics.record_stride},
            {"field", cfg.dynamics.field_kind},
        };
        if (cfg.dynamics.escape_radius > 0.0)
            node["escape_radius"] = format_si(cfg.dynamics.escape_radius, "m");
        if (cfg.dynamics.scan) {
            node["scan"] = {{"q_e", cfg.dynamics.scan->q_electron},
                            {"q_I", cfg.dynamics.scan->q_ion},
                            {"periods", cfg.dynamics.scan->periods}};
        }
        if (cfg.dynamics.coulomb_check) {
            const auto& c = *cfg.dynamics.coulomb_check;
            json cc = {{"energy", format_si(c.electron_energy, "J")}};
            if (c.t_end > 0.0) cc["t_end"] = format_si(c.t_end, "s");
            if (c.orbit_radius > 0.0)
                cc["orbit_radius"] = format_si(c.orbit_radius, "m");
            node["coulomb_check"] = cc;
        }
        root["dynamics"] = node;
    }
    root["output"] = {{"directory", cfg.output.directory},
                      {"formats", cfg.output.formats}};
    return root.dump(2);
}

double parse_quantity(const std::string& text, Dimension dimension,
                      const std::string& field) {
    return parse_with_table(text, unit_table(dimension), field);
}

// Declared in noise.hpp; lives here with the unit parser.
std::vector<TrapModelPreset> load_presets_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("presets: cannot open '" + path + "'");
    json root;
    try {
        root = json::parse(in);
    } catch (const json::parse_error& err) {
        throw ConfigError(std::string("presets: invalid JSON: ") + err.what());
    }
    if (!root.is_array())
        throw ConfigError("presets: expected an array of trap models");
    std::vector<TrapModelPreset> models;
    for (const auto& node : root) models.push_back(parse_inline_model(node));
    return models;
}

}  // namespace trapforge
