#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trapforge/config.hpp"
#include "trapforge/constants.hpp"
#include "trapforge/drive.hpp"
#include "trapforge/dynamics.hpp"
#include "trapforge/geometry.hpp"
#include "trapforge/noise.hpp"
#include "trapforge/report.hpp"
#include "trapforge/spectrum.hpp"

namespace py = pybind11;
using namespace trapforge;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Planar electron-ion ring-trap design toolkit";
    m.attr("__version__") = kToolVersion;

    auto constants = m.def_submodule("constants", "CODATA 2018 anchors (SI)");
    constants.attr("electron_mass") = PhysicalConstants::electron_mass;
    constants.attr("elementary_charge") = PhysicalConstants::elementary_charge;
    constants.attr("planck") = PhysicalConstants::planck;
    constants.attr("reduced_planck") = PhysicalConstants::reduced_planck;
    constants.attr("boltzmann") = PhysicalConstants::boltzmann;
    constants.attr("vacuum_permeability") = PhysicalConstants::vacuum_permeability;
    constants.attr("hartree_energy") = PhysicalConstants::hartree_energy;
    constants.attr("bohr_radius") = PhysicalConstants::bohr_radius;
    constants.attr("au_time") = PhysicalConstants::au_time;

    m.def("skin_depth", &skin_depth, py::arg("resistivity"),
          py::arg("angular_frequency"));

    // units
    py::enum_<Dimension>(m, "Dimension")
        .value("length", Dimension::length)
        .value("frequency", Dimension::frequency)
        .value("angular_frequency", Dimension::angular_frequency)
        .value("energy", Dimension::energy)
        .value("temperature", Dimension::temperature)
        .value("voltage", Dimension::voltage)
        .value("resistivity", Dimension::resistivity)
        .value("spectral_density", Dimension::spectral_density)
        .value("rate", Dimension::rate)
        .value("time", Dimension::time);
    m.def(
        "si_to_au",
        [](double value, Dimension d) { return si_to_au({value, d}).value; },
        py::arg("value"), py::arg("dimension"));
    m.def(
        "au_to_si",
        [](double value, Dimension d) { return au_to_si({value, d}).value; },
        py::arg("value"), py::arg("dimension"));

    // ring geometry
    py::class_<RingGeometry>(m, "RingGeometry")
        .def(py::init<double, double>(), py::arg("inner_radius"),
             py::arg("outer_radius"))
        .def_readonly("inner_radius", &RingGeometry::inner_radius)
        .def_readonly("outer_radius", &RingGeometry::outer_radius)
        .def_readonly("ratio", &RingGeometry::ratio)
        .def("height", &RingGeometry::height)
        .def("characteristic_dim", &RingGeometry::characteristic_dim);

    py::class_<AxialProfile>(m, "AxialProfile")
        .def_readonly("z", &AxialProfile::z)
        .def_readonly("pseudopotential", &AxialProfile::pseudopotential)
        .def_readonly("field_null_height", &AxialProfile::field_null_height)
        .def_readonly("turning_point", &AxialProfile::turning_point)
        .def_readonly("depth", &AxialProfile::depth)
        .def_readonly("steepness", &AxialProfile::steepness)
        .def_readonly("secular_frequency", &AxialProfile::secular_frequency);

    py::enum_<RingMetric>(m, "RingMetric")
        .value("steepness", RingMetric::steepness)
        .value("depth", RingMetric::depth);

    m.def("height_from_radii", &height_from_radii, py::arg("inner_radius"),
          py::arg("outer_radius"));
    m.def("inner_radius_for_height", &inner_radius_for_height, py::arg("height"),
          py::arg("ratio"));
    m.def("steepness_shape", &steepness_shape, py::arg("ratio"));
    m.def("depth_shape", &depth_shape, py::arg("ratio"));
    m.def("optimize_ratio", &optimize_ratio, py::arg("metric"), py::arg("r_lo"),
          py::arg("r_hi"), py::arg("tolerance") = 1e-6);
    m.def("on_axis_potential", &on_axis_potential, py::arg("geometry"),
          py::arg("applied_voltage"), py::arg("z"));
    m.def("on_axis_field", &on_axis_field, py::arg("geometry"),
          py::arg("applied_voltage"), py::arg("z"));
    m.def("pseudopotential_profile",
          py::overload_cast<const RingGeometry&, double, double, double, double,
                            const std::vector<double>&>(
              &pseudopotential_profile),
          py::arg("geometry"), py::arg("amplitude"),
          py::arg("angular_frequency"), py::arg("mass"), py::arg("charge"),
          py::arg("z_grid"));
    m.def("pseudopotential_profile",
          py::overload_cast<const RingGeometry&, double, double,
                            const SpeciesState&, const std::vector<double>&>(
              &pseudopotential_profile),
          py::arg("geometry"), py::arg("amplitude"),
          py::arg("angular_frequency"), py::arg("species"), py::arg("z_grid"));

    // drive and stability
    py::class_<DriveConfig>(m, "DriveConfig")
        .def(py::init([](double v_e0, double omega_e, double v_i0,
                         double omega_i, double phase) {
                 DriveConfig d{v_e0, omega_e, v_i0, omega_i, phase};
                 validate_drive(d);
                 return d;
             }),
             py::arg("electron_amplitude"), py::arg("electron_omega"),
             py::arg("ion_amplitude") = 0.0, py::arg("ion_omega") = 1.0,
             py::arg("phase") = 0.0)
        .def_readwrite("electron_amplitude", &DriveConfig::electron_amplitude)
        .def_readwrite("electron_omega", &DriveConfig::electron_omega)
        .def_readwrite("ion_amplitude", &DriveConfig::ion_amplitude)
        .def_readwrite("ion_omega", &DriveConfig::ion_omega)
        .def_readwrite("phase", &DriveConfig::phase);

    py::class_<ResonanceMargin>(m, "ResonanceMargin")
        .def_readonly("n", &ResonanceMargin::n)
        .def_readonly("omega_res", &ResonanceMargin::omega_res)
        .def_readonly("rel_dist_electron", &ResonanceMargin::rel_dist_electron)
        .def_readonly("rel_dist_ion", &ResonanceMargin::rel_dist_ion);

    py::class_<StabilityReport>(m, "StabilityReport")
        .def_readonly("q_electron", &StabilityReport::q_electron)
        .def_readonly("q_ion", &StabilityReport::q_ion)
        .def_readonly("secular_electron", &StabilityReport::secular_electron)
        .def_readonly("sidebands_electron", &StabilityReport::sidebands_electron)
        .def_readonly("sidebands_ion", &StabilityReport::sidebands_ion)
        .def_readonly("resonance_margins", &StabilityReport::resonance_margins)
        .def_readonly("warnings", &StabilityReport::warnings);

    m.def("waveform", &waveform, py::arg("drive"), py::arg("t"));
    m.def("quadrupole_factor", &quadrupole_factor, py::arg("x"), py::arg("y"),
          py::arg("z"), py::arg("r0"));
    m.def("stability_param", &stability_param, py::arg("mass"),
          py::arg("amplitude"), py::arg("omega"), py::arg("r0"));
    m.def("stability_params", &stability_params, py::arg("drive"),
          py::arg("r0"));
    m.def("secular_frequency", &secular_frequency, py::arg("q"),
          py::arg("omega_drive"));
    m.def("sidebands", &sidebands, py::arg("omega_secular"),
          py::arg("omega_drive"), py::arg("n_lo"), py::arg("n_hi"));
    m.def(
        "parametric_resonances",
        [](double amplitude, double r0, int n_max) {
            std::vector<std::pair<int, double>> out;
            for (const auto& r : parametric_resonances(amplitude, r0, n_max))
                out.emplace_back(r.n, r.omega_res);
            return out;
        },
        py::arg("amplitude"), py::arg("r0"), py::arg("n_max"));
    py::class_<TwoFreqThresholds>(m, "TwoFreqThresholds")
        .def(py::init<>())
        .def_readwrite("amplitude_ratio", &TwoFreqThresholds::amplitude_ratio)
        .def_readwrite("frequency_ratio", &TwoFreqThresholds::frequency_ratio)
        .def_readwrite("q_limit", &TwoFreqThresholds::q_limit)
        .def_readwrite("resonance_margin", &TwoFreqThresholds::resonance_margin)
        .def_readwrite("n_max", &TwoFreqThresholds::n_max);

    m.def("validate_two_freq", &validate_two_freq, py::arg("drive"),
          py::arg("r0"), py::arg("thresholds") = TwoFreqThresholds{});

    // dynamics
    py::class_<SpeciesState>(m, "SpeciesState")
        .def(py::init<>())
        .def_readwrite("mass", &SpeciesState::mass)
        .def_readwrite("charge", &SpeciesState::charge)
        .def_readwrite("position", &SpeciesState::position)
        .def_readwrite("velocity", &SpeciesState::velocity)
        .def_readwrite("label", &SpeciesState::label);
    m.def("make_electron", &make_electron, py::arg("position"),
          py::arg("velocity"));

    py::class_<FieldModel>(m, "FieldModel")
        .def_static("quadrupole", &FieldModel::quadrupole, py::arg("drive"),
                    py::arg("r0"), py::arg("coulomb") = false)
        .def_static("ring_axis", &FieldModel::ring_axis, py::arg("geometry"),
                    py::arg("drive"), py::arg("coulomb") = false)
        .def_readwrite("coulomb_coupling", &FieldModel::coulomb_coupling)
        .def("characteristic_dim", &FieldModel::characteristic_dim);

    py::class_<Trajectory>(m, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("positions", &Trajectory::positions)
        .def_readonly("velocities", &Trajectory::velocities)
        .def_readonly("energy_samples", &Trajectory::energy_samples)
        .def_readonly("bounded", &Trajectory::bounded)
        .def_readonly("escape_time", &Trajectory::escape_time);

    py::class_<IntegrationOptions>(m, "IntegrationOptions")
        .def(py::init<>())
        .def_readwrite("t_end", &IntegrationOptions::t_end)
        .def_readwrite("dt", &IntegrationOptions::dt)
        .def_readwrite("escape_radius", &IntegrationOptions::escape_radius)
        .def_readwrite("record_stride", &IntegrationOptions::record_stride);

    py::enum_<Axis>(m, "Axis")
        .value("x", Axis::x)
        .value("y", Axis::y)
        .value("z", Axis::z);

    m.def("integrate", &integrate, py::arg("states"), py::arg("field"),
          py::arg("options"));
    m.def("extract_secular", &extract_secular, py::arg("trajectory"),
          py::arg("axis"), py::arg("cutoff_omega"), py::arg("min_periods") = 50);

    py::class_<StabilityScan>(m, "StabilityScan")
        .def_readonly("q_electron_grid", &StabilityScan::q_electron_grid)
        .def_readonly("q_ion_grid", &StabilityScan::q_ion_grid)
        .def_readonly("bounded", &StabilityScan::bounded);
    m.def("scan_stability", &scan_stability, py::arg("drive_template"),
          py::arg("r0"), py::arg("q_electron_grid"), py::arg("q_ion_grid"),
          py::arg("periods"));
    py::class_<CoulombCheckOptions>(m, "CoulombCheckOptions")
        .def(py::init<>())
        .def_readwrite("orbit_radius", &CoulombCheckOptions::orbit_radius)
        .def_readwrite("ion_charge_factor",
                       &CoulombCheckOptions::ion_charge_factor)
        .def_readwrite("ion_mass", &CoulombCheckOptions::ion_mass);
    m.def("coulomb_significance", &coulomb_significance,
          py::arg("electron_energy_ev"), py::arg("field"), py::arg("t_end"),
          py::arg("options") = CoulombCheckOptions{});

    // quantum spectrum
    py::enum_<KnotLayout>(m, "KnotLayout")
        .value("linear", KnotLayout::linear)
        .value("geometric", KnotLayout::geometric)
        .value("mixed", KnotLayout::mixed);

    py::class_<BasisSpec>(m, "BasisSpec")
        .def(py::init<>())
        .def_readwrite("order", &BasisSpec::order)
        .def_readwrite("count", &BasisSpec::count)
        .def_readwrite("layout", &BasisSpec::layout);

    py::class_<RadialProblem>(m, "RadialProblem")
        .def(py::init<>())
        .def_readwrite("core_charge", &RadialProblem::core_charge)
        .def_readwrite("omega", &RadialProblem::omega)
        .def_readwrite("angular_momentum", &RadialProblem::angular_momentum)
        .def_readwrite("box_radius", &RadialProblem::box_radius)
        .def_readwrite("basis", &RadialProblem::basis);

    py::class_<LevelLadder>(m, "LevelLadder")
        .def_readonly("energies", &LevelLadder::energies)
        .def_readonly("problem", &LevelLadder::problem)
        .def_readonly("converged_count", &LevelLadder::converged_count);

    py::class_<SpacingProfile>(m, "SpacingProfile")
        .def_readonly("spacing", &SpacingProfile::spacing)
        .def_readonly("min_index", &SpacingProfile::min_index)
        .def_readonly("flat", &SpacingProfile::flat);

    py::class_<RegionBoundaries>(m, "RegionBoundaries")
        .def_readonly("energy_low", &RegionBoundaries::energy_low)
        .def_readonly("energy_high", &RegionBoundaries::energy_high)
        .def_readonly("radius_low", &RegionBoundaries::radius_low)
        .def_readonly("radius_high", &RegionBoundaries::radius_high);

    py::class_<TuningCurve>(m, "TuningCurve")
        .def_readonly("amplitudes", &TuningCurve::amplitudes)
        .def_readonly("relative_transition", &TuningCurve::relative_transition);

    m.def("potential", &potential, py::arg("core_charge"), py::arg("omega"),
          py::arg("r"));
    m.def("crossover_radius", &crossover_radius, py::arg("core_charge"),
          py::arg("omega"));
    m.def("eigenlevels", &eigenlevels, py::arg("problem"), py::arg("count"));
    m.def("spacing_profile", &spacing_profile, py::arg("ladder"));
    m.def("classify_regions", &classify_regions, py::arg("core_charge"),
          py::arg("omega"), py::arg("deviation") = 0.10);
    m.def("transition_energy", &transition_energy, py::arg("ladder"),
          py::arg("index"), py::arg("delta") = 1);
    m.def("omega_from_drive", &omega_from_drive, py::arg("drive"),
          py::arg("r0"));
    m.def("tuning_curve", &tuning_curve, py::arg("base"), py::arg("drive"),
          py::arg("r0"), py::arg("state_index"), py::arg("amplitude_grid"),
          py::arg("amplitude_ref"));

    // noise budget
    py::class_<TrapModelPreset>(m, "TrapModelPreset")
        .def(py::init<>())
        .def_readwrite("name", &TrapModelPreset::name)
        .def_readwrite("electrode_temperature",
                       &TrapModelPreset::electrode_temperature)
        .def_readwrite("circuit_temperature",
                       &TrapModelPreset::circuit_temperature)
        .def_readwrite("electrode_resistivity",
                       &TrapModelPreset::electrode_resistivity)
        .def_readwrite("circuit_resistance",
                       &TrapModelPreset::circuit_resistance)
        .def_readwrite("height", &TrapModelPreset::height)
        .def_readwrite("secular_omega", &TrapModelPreset::secular_omega)
        .def_readwrite("adatom_spectral_density",
                       &TrapModelPreset::adatom_spectral_density)
        .def_readwrite("roughness_spectral_density",
                       &TrapModelPreset::roughness_spectral_density)
        .def_readwrite("surface_fluct", &TrapModelPreset::surface_fluct);

    py::class_<NoiseSourceEntry>(m, "NoiseSourceEntry")
        .def_readonly("source", &NoiseSourceEntry::source)
        .def_readonly("spectral_density", &NoiseSourceEntry::spectral_density)
        .def_readonly("quanta_rate", &NoiseSourceEntry::quanta_rate)
        .def_readonly("temperature_rate", &NoiseSourceEntry::temperature_rate);

    py::class_<NoiseBudget>(m, "NoiseBudget")
        .def_readonly("sources", &NoiseBudget::sources)
        .def_readonly("warnings", &NoiseBudget::warnings)
        .def_readonly("total_spectral_density",
                      &NoiseBudget::total_spectral_density)
        .def_readonly("total_quanta_rate", &NoiseBudget::total_quanta_rate)
        .def_readonly("total_temperature_rate",
                      &NoiseBudget::total_temperature_rate);

    m.def("builtin_presets", &builtin_presets,
          py::return_value_policy::reference);
    m.def("find_preset", &find_preset, py::arg("name"),
          py::return_value_policy::reference);
    m.def(
        "s_bbs",
        [](double t, double rho, double d, double omega, double s_eta) {
            return s_bbs(t, rho, d, omega, s_eta);
        },
        py::arg("electrode_temperature"), py::arg("electrode_resistivity"),
        py::arg("height"), py::arg("omega"), py::arg("surface_fluct") = 2.0);
    m.def("s_jn", &s_jn, py::arg("circuit_temperature"),
          py::arg("circuit_resistance"), py::arg("height"));
    m.def("ground_state_heating_rate", &ground_state_heating_rate,
          py::arg("spectral_density"), py::arg("omega"));
    m.def("scaled_heating_rate", &scaled_heating_rate, py::arg("nbar"),
          py::arg("spectral_density"), py::arg("omega"));
    m.def("temperature_rate", &temperature_rate, py::arg("quanta_rate"),
          py::arg("omega"));
    m.def("budget", &budget, py::arg("preset"));
    m.def("combined_cryogenic_rate", &combined_cryogenic_rate,
          py::arg("preset"));
    m.def("collision_rate", &collision_rate, py::arg("pressure"),
          py::arg("gas_temperature"), py::arg("gas_mass"),
          py::arg("cross_section"));

    // reports (used by the python smoke tests)
    m.def(
        "run_command",
        [](const std::string& name, const std::string& config_path,
           const std::string& out_dir) {
            const RunConfig cfg = parse_config(config_path);
            if (name == "geometry") return run_geometry(cfg, out_dir);
            if (name == "stability") return run_stability(cfg, out_dir);
            if (name == "dynamics") return run_dynamics(cfg, out_dir);
            if (name == "spectrum") return run_spectrum(cfg, out_dir);
            if (name == "noise") return run_noise(cfg, out_dir, false);
            throw std::invalid_argument("unknown command " + name);
        },
        py::arg("name"), py::arg("config_path"), py::arg("out_dir"));
}
