#include "trapforge/report.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "trapforge/constants.hpp"

namespace trapforge {

namespace fs = std::filesystem;
using pc = PhysicalConstants;

const char* const kToolVersion = "0.1.0";

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

namespace {

class ReportFile {
  public:
    ReportFile(const std::string& out_dir, const std::string& name,
               const RunConfig& config, const std::string& columns)
        : path_((fs::path(out_dir) / name).string()) {
        fs::create_directories(out_dir);
        stream_.open(path_, std::ios::binary | std::ios::trunc);
        if (!stream_)
            throw std::runtime_error("cannot open output file '" + path_ + "'");
        stream_ << "# trapforge " << kToolVersion << "\n";
        stream_ << "# config-hash: " << config.config_hash << "\n";
        if (!columns.empty()) stream_ << "# columns: " << columns << "\n";
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            stream_ << (i ? "," : "") << cells[i];
        stream_ << "\n";
    }
    void line(const std::string& text) { stream_ << text << "\n"; }
    void kv(const std::string& key, const std::string& value) {
        stream_ << key << " = " << value << "\n";
    }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::ofstream stream_;
};

const GeometrySection& need_geometry(const RunConfig& config) {
    if (!config.geometry)
        throw ConfigError("this command requires a geometry section");
    return *config.geometry;
}

const DriveConfig& need_drive(const RunConfig& config) {
    if (!config.drive)
        throw ConfigError("this command requires a drive section");
    return *config.drive;
}

}  // namespace

std::vector<std::string> run_geometry(const RunConfig& config,
                                      const std::string& out_dir) {
    const auto geom = need_geometry(config).ring();
    const double h = geom.height();
    std::vector<std::string> files;

    {
        ReportFile f(out_dir, "geometry_optimize.csv", config,
                     "metric, r_star, a [m], b [m], h [m]");
        for (const auto metric : {RingMetric::steepness, RingMetric::depth}) {
            const double r_star = optimize_ratio(metric, 1.5, 20.0, 1e-6);
            const double a = inner_radius_for_height(h, r_star);
            f.row({metric == RingMetric::steepness ? "steepness" : "depth",
                   format_value(r_star), format_value(a),
                   format_value(r_star * a), format_value(h)});
        }
        files.push_back(f.path());
    }

    if (config.drive) {
        const auto& drive = *config.drive;
        const double mass = config.species.empty() ? pc::electron_mass
                                                   : config.species[0].mass;
        const double charge = config.species.empty()
                                  ? -pc::elementary_charge
                                  : config.species[0].charge;
        std::vector<double> grid;
        const int n = 4000;
        for (int i = 0; i <= n; ++i)
            grid.push_back(6.0 * geom.outer_radius * i / n);

        AxialProfile profile;
        if (drive.electron_amplitude > 0.0) {
            profile =
                pseudopotential_profile(geom, drive.electron_amplitude,
                                        drive.electron_omega, mass, charge, grid);
        } else {
            // Unpowered ring: flat zero profile with the closed-form null.
            profile.z = grid;
            profile.pseudopotential.assign(grid.size(), 0.0);
            profile.field_null_height = h;
            profile.turning_point = h;
        }

        ReportFile f(out_dir, "geometry_profile.csv", config,
                     "z [m], pseudopotential [K]");
        for (std::size_t i = 0; i < profile.z.size(); ++i)
            f.row({format_value(profile.z[i]),
                   format_value(profile.pseudopotential[i] / pc::boltzmann)});
        files.push_back(f.path());

        ReportFile s(out_dir, "geometry_summary.txt", config, "");
        s.kv("h_m", format_value(profile.field_null_height));
        s.kv("h_closed_form_m", format_value(h));
        s.kv("z_max_m", format_value(profile.turning_point));
        s.kv("depth_K", format_value(profile.depth / pc::boltzmann));
        s.kv("steepness_J_per_m", format_value(profile.steepness));
        s.kv("secular_frequency_rad_s",
             format_value(profile.secular_frequency));
        files.push_back(s.path());
    }
    return files;
}

std::vector<std::string> run_stability(const RunConfig& config,
                                       const std::string& out_dir) {
    const auto& drive = need_drive(config);
    const double r0 = need_geometry(config).ring().height();
    const auto report = validate_two_freq(drive, r0, config.thresholds);
    std::vector<std::string> files;

    {
        ReportFile f(out_dir, "stability_report.txt", config, "");
        f.kv("q_e", format_value(report.q_electron));
        f.kv("q_I", format_value(report.q_ion));
        f.kv("omega_e_rad_s", format_value(report.secular_electron));
        f.kv("r0_m", format_value(r0));
        for (std::size_t i = 0; i < report.sidebands_electron.size(); ++i)
            f.kv("sideband_e_" + std::to_string(i),
                 format_value(report.sidebands_electron[i]));
        for (std::size_t i = 0; i < report.sidebands_ion.size(); ++i)
            f.kv("sideband_I_" + std::to_string(i),
                 format_value(report.sidebands_ion[i]));
        f.kv("warning_count", std::to_string(report.warnings.size()));
        for (std::size_t i = 0; i < report.warnings.size(); ++i)
            f.kv("warning_" + std::to_string(i), report.warnings[i]);
        files.push_back(f.path());
    }
    {
        ReportFile f(out_dir, "stability_resonances.csv", config,
                     "n, Omega_res [rad/s], rel_dist_e, rel_dist_I");
        for (const auto& m : report.resonance_margins)
            f.row({std::to_string(m.n), format_value(m.omega_res),
                   format_value(m.rel_dist_electron),
                   format_value(m.rel_dist_ion)});
        files.push_back(f.path());
    }
    return files;
}

std::vector<std::string> run_dynamics(const RunConfig& config,
                                      const std::string& out_dir) {
    const auto& drive = need_drive(config);
    const double r0 = need_geometry(config).ring().height();
    const auto& dyn = config.dynamics;
    std::vector<std::string> files;

    FieldModel field = dyn.field_kind == "ring_axis"
                           ? FieldModel::ring_axis(need_geometry(config).ring(),
                                                   drive)
                           : FieldModel::quadrupole(drive, r0);

    std::vector<SpeciesState> species = config.species;
    if (species.empty())
        species.push_back(
            make_electron({0.01 * r0, 0.01 * r0, 0.01 * r0}, {0.0, 0.0, 0.0}));

    const double slow =
        drive.ion_amplitude > 0.0 ? drive.ion_omega : drive.electron_omega;
    const double fast = std::max(drive.electron_omega, drive.ion_omega);
    IntegrationOptions opts;
    opts.t_end = dyn.periods * two_pi / slow;
    opts.dt = (two_pi / fast) / dyn.steps_per_period;
    opts.escape_radius =
        dyn.escape_radius > 0.0 ? dyn.escape_radius : 10.0 * r0;
    opts.record_stride = dyn.record_stride;

    const auto trajectories = integrate(species, field, opts);

    ReportFile summary(out_dir, "dynamics_summary.txt", config, "");
    const auto [q_e, q_i] = stability_params(drive, r0);
    summary.kv("q_e", format_value(q_e));
    summary.kv("omega_e_eq5_rad_s",
               format_value(secular_frequency(q_e, drive.electron_omega)));
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
        const auto& traj = trajectories[i];
        const std::string tag = species[i].label + "_" + std::to_string(i);
        ReportFile f(out_dir, "trajectory_" + tag + ".csv", config,
                     "t [s], x [m], y [m], z [m], vx [m/s], vy [m/s], vz [m/s]");
        for (std::size_t k = 0; k < traj.times.size(); ++k)
            f.row({format_value(traj.times[k]),
                   format_value(traj.positions[k][0]),
                   format_value(traj.positions[k][1]),
                   format_value(traj.positions[k][2]),
                   format_value(traj.velocities[k][0]),
                   format_value(traj.velocities[k][1]),
                   format_value(traj.velocities[k][2])});
        files.push_back(f.path());

        summary.kv("bounded_" + tag, traj.bounded ? "true" : "false");
        if (traj.escape_time)
            summary.kv("escape_time_s_" + tag, format_value(*traj.escape_time));
        if (traj.bounded && traj.times.size() > 64) {
            // Half the fast drive excludes the micromotion lines while
            // keeping the secular tone in band for any stable q.
            const double cutoff = drive.electron_omega / 2.0;
            try {
                const double omega_meas =
                    extract_secular(traj, Axis::x, cutoff);
                summary.kv("omega_secular_x_rad_s_" + tag,
                           format_value(omega_meas));
            } catch (const std::exception& err) {
                summary.kv("omega_secular_x_" + tag,
                           std::string("unavailable: ") + err.what());
            }
        }
    }

    if (dyn.scan) {
        const auto scan = scan_stability(drive, r0, dyn.scan->q_electron,
                                         dyn.scan->q_ion, dyn.scan->periods);
        ReportFile f(out_dir, "stability_scan.csv", config,
                     "q_e, q_I, bounded");
        for (std::size_t i = 0; i < scan.q_electron_grid.size(); ++i)
            for (std::size_t j = 0; j < scan.q_ion_grid.size(); ++j)
                f.row({format_value(scan.q_electron_grid[i]),
                       format_value(scan.q_ion_grid[j]),
                       scan.bounded[i * scan.q_ion_grid.size() + j] ? "1" : "0"});
        files.push_back(f.path());
    }

    if (dyn.coulomb_check) {
        const auto& cc = *dyn.coulomb_check;
        const double energy_ev = cc.electron_energy / pc::elementary_charge;
        double t_end = cc.t_end;
        if (t_end <= 0.0) {
            const double omega_sec =
                secular_frequency(q_e, drive.electron_omega);
            t_end = 100.0 * two_pi / omega_sec;
        }
        CoulombCheckOptions copts;
        copts.orbit_radius = cc.orbit_radius;
        const double divergence =
            coulomb_significance(energy_ev, field, t_end, copts);
        ReportFile f(out_dir, "coulomb_check.txt", config, "");
        f.kv("electron_energy_eV", format_value(energy_ev));
        f.kv("t_end_s", format_value(t_end));
        f.kv("relative_divergence", format_value(divergence));
        files.push_back(f.path());
    }

    files.push_back(summary.path());
    return files;
}

std::vector<std::string> run_spectrum(const RunConfig& config,
                                      const std::string& out_dir) {
    if (!config.quantum)
        throw ConfigError("spectrum requires a quantum section");
    const auto& q = *config.quantum;

    RadialProblem problem;
    problem.core_charge = q.core_charge;
    problem.angular_momentum = q.angular_momentum;
    problem.basis = q.basis;
    if (q.derive_from_drive) {
        const double r0 = need_geometry(config).ring().height();
        const double omega_si = omega_from_drive(need_drive(config), r0);
        problem.omega =
            si_to_au({omega_si, Dimension::angular_frequency}).value;
    } else {
        problem.omega = q.omega_au;
    }
    problem.box_radius = q.box_radius_au > 0.0
                             ? q.box_radius_au
                             : (problem.omega > 0.0
                                    ? 8.0 / std::sqrt(problem.omega)
                                    : 0.0);
    if (!(problem.box_radius > 0.0))
        throw ConfigError("quantum.R_max is required when omega = 0");

    const auto ladder = eigenlevels(problem, q.levels);
    std::vector<std::string> files;
    const double au_to_hz = pc::hartree_energy / pc::planck;

    {
        ReportFile f(out_dir, "spectrum_ladder.csv", config,
                     "index, energy [a.u.], energy/h [Hz]");
        f.line("# basis: order " + std::to_string(problem.basis.order) +
               ", count " + std::to_string(problem.basis.count));
        f.line("# converged levels: " + std::to_string(ladder.converged_count));
        f.line("# ladder stride: " + std::to_string(q.ladder_stride));
        for (std::size_t i = 0; i < ladder.energies.size();
             i += static_cast<std::size_t>(std::max(1, q.ladder_stride)))
            f.row({std::to_string(i), format_value(ladder.energies[i]),
                   format_value(ladder.energies[i] * au_to_hz)});
        files.push_back(f.path());
    }
    {
        const auto profile = spacing_profile(ladder);
        ReportFile f(out_dir, "spectrum_spacing.csv", config,
                     "index, delta_E [a.u.]");
        f.line("# min_index: " + std::to_string(profile.min_index) +
               (profile.flat ? " (flat profile)" : ""));
        for (std::size_t i = 0; i < profile.spacing.size(); ++i)
            f.row({std::to_string(i), format_value(profile.spacing[i])});
        files.push_back(f.path());
    }
    if (problem.core_charge > 0.0 && problem.omega > 0.0) {
        const auto regions =
            classify_regions(problem.core_charge, problem.omega);
        ReportFile f(out_dir, "spectrum_regions.txt", config, "");
        f.kv("boundary_low_au", format_value(regions.energy_low));
        f.kv("boundary_high_au", format_value(regions.energy_high));
        f.kv("radius_low_au", format_value(regions.radius_low));
        f.kv("radius_high_au", format_value(regions.radius_high));
        files.push_back(f.path());
    }
    if (q.tuning) {
        const auto curve = tuning_curve(problem, need_drive(config),
                                        need_geometry(config).ring().height(),
                                        q.tuning->state_index,
                                        q.tuning->amplitudes,
                                        q.tuning->reference);
        ReportFile f(out_dir, "spectrum_tuning.csv", config,
                     "V_e0 [V], dE/dE_ref");
        for (std::size_t i = 0; i < curve.amplitudes.size(); ++i)
            f.row({format_value(curve.amplitudes[i]),
                   format_value(curve.relative_transition[i])});
        files.push_back(f.path());
    }
    return files;
}

std::vector<std::string> run_noise(const RunConfig& config,
                                   const std::string& out_dir, bool table2) {
    if (!config.noise && !table2)
        throw ConfigError("noise requires a noise section (or --table2)");
    std::vector<std::string> files;

    std::vector<TrapModelPreset> models;
    if (table2) {
        models = builtin_presets();
    } else {
        models.push_back(config.noise->model());
    }

    {
        ReportFile f(out_dir, "noise_budget.csv", config,
                     "model, BBS [1e-20 V^2/m^2/Hz], JN [1e-17], SAd [1e-19], "
                     "SR [1e-30], Total [1e-17], Gamma0 [1/s], Tdot [K/s]");
        for (const auto& model : models) {
            const auto b = budget(model);
            f.row({model.name,
                   format_value(b.sources[0].spectral_density / 1e-20),
                   format_value(b.sources[1].spectral_density / 1e-17),
                   format_value(b.sources[2].spectral_density / 1e-19),
                   format_value(b.sources[3].spectral_density / 1e-30),
                   format_value(b.total_spectral_density / 1e-17),
                   format_value(b.total_quanta_rate),
                   format_value(b.total_temperature_rate)});
        }
        files.push_back(f.path());
    }
    {
        ReportFile f(out_dir, "noise_sources.csv", config,
                     "model, source, S_E [V^2/m^2/Hz], Gamma0 [1/s], Tdot [K/s]");
        for (const auto& model : models) {
            const auto b = budget(model);
            for (const auto& s : b.sources)
                f.row({model.name, s.source, format_value(s.spectral_density),
                       format_value(s.quanta_rate),
                       format_value(s.temperature_rate)});
            f.row({model.name, "Total",
                   format_value(b.total_spectral_density),
                   format_value(b.total_quanta_rate),
                   format_value(b.total_temperature_rate)});
        }
        files.push_back(f.path());
    }
    if (config.noise && config.noise->collision) {
        const auto& c = *config.noise->collision;
        const double rate = collision_rate(c.pressure, c.gas_temperature,
                                           c.gas_mass, c.cross_section);
        ReportFile f(out_dir, "noise_collision.txt", config, "");
        f.kv("rate_1_s", format_value(rate));
        f.kv("mean_interval_s", format_value(rate > 0.0 ? 1.0 / rate : 0.0));
        files.push_back(f.path());
    }
    return files;
}

}  // namespace trapforge
