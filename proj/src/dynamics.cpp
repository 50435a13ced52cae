#include "trapforge/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "trapforge/constants.hpp"

namespace trapforge {

SpeciesState make_electron(const Vec3& position, const Vec3& velocity) {
    SpeciesState s;
    s.mass = PhysicalConstants::electron_mass;
    s.charge = -PhysicalConstants::elementary_charge;
    s.position = position;
    s.velocity = velocity;
    s.label = "electron";
    return s;
}

FieldModel FieldModel::quadrupole(const DriveConfig& drive, double r0,
                                  bool coulomb) {
    if (!(r0 > 0.0))
        throw std::domain_error("FieldModel::quadrupole: require r0 > 0");
    FieldModel f;
    f.kind = Kind::quadrupole;
    f.drive = drive;
    f.r0 = r0;
    f.coulomb_coupling = coulomb;
    return f;
}

FieldModel FieldModel::ring_axis(const RingGeometry& geom,
                                 const DriveConfig& drive, bool coulomb) {
    FieldModel f;
    f.kind = Kind::ring_axis;
    f.drive = drive;
    f.ring = geom;
    f.r0 = geom.height();
    f.coulomb_coupling = coulomb;
    return f;
}

double FieldModel::characteristic_dim() const { return r0; }

namespace {

constexpr double k_min_separation = 1e-9;  // [m], Coulomb hard-error radius

double norm3(const Vec3& v) {
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

// Trap force on a particle of signed charge q_c at x, plus its potential
// energy contribution.
void trap_force(const FieldModel& field, double v_t, double q_c, const Vec3& x,
                Vec3& force, double& potential_energy) {
    if (field.kind == FieldModel::Kind::quadrupole) {
        const double inv_r02 = 1.0 / (field.r0 * field.r0);
        // Phi = V(t) (x^2 + y^2 - 2 z^2) / (2 r0^2); F = -q_c grad Phi.
        force[0] = -q_c * v_t * x[0] * inv_r02;
        force[1] = -q_c * v_t * x[1] * inv_r02;
        force[2] = 2.0 * q_c * v_t * x[2] * inv_r02;
        potential_energy =
            q_c * v_t * (x[0] * x[0] + x[1] * x[1] - 2.0 * x[2] * x[2]) * 0.5 *
            inv_r02;
    } else {
        const RingGeometry& g = *field.ring;
        const double z = x[2];
        const double az = std::abs(z);
        const double a2 = g.inner_radius * g.inner_radius;
        const double b2 = g.outer_radius * g.outer_radius;
        // Unit-voltage axial field, extended to z < 0 by symmetry.
        const double e1 = -(a2 / std::pow(a2 + az * az, 1.5) -
                            b2 / std::pow(b2 + az * az, 1.5));
        const double sgn = z >= 0.0 ? 1.0 : -1.0;
        force[0] = 0.0;
        force[1] = 0.0;
        force[2] = q_c * v_t * e1 * sgn;
        const double phi1 = az / std::sqrt(a2 + az * az) -
                            az / std::sqrt(b2 + az * az);
        potential_energy = q_c * v_t * phi1;
    }
}

struct ParticleWork {
    Vec3 x;
    Vec3 v;
    Vec3 force;
    bool active = true;
};

void accumulate_forces(const FieldModel& field, double t,
                       const std::vector<SpeciesState>& species,
                       std::vector<ParticleWork>& work,
                       std::vector<double>* potential_out) {
    const double v_t = waveform(field.drive, t);
    for (std::size_t i = 0; i < work.size(); ++i) {
        double pe = 0.0;
        trap_force(field, v_t, species[i].charge, work[i].x, work[i].force, pe);
        if (potential_out) (*potential_out)[i] = pe;
    }
    if (!field.coulomb_coupling) return;
    const double ke = PhysicalConstants::coulomb_constant;
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = i + 1; j < work.size(); ++j) {
            if (species[i].charge == 0.0 || species[j].charge == 0.0) continue;
            Vec3 d{work[i].x[0] - work[j].x[0], work[i].x[1] - work[j].x[1],
                   work[i].x[2] - work[j].x[2]};
            const double r = norm3(d);
            if (r < k_min_separation)
                throw std::runtime_error(
                    "integrate: particle separation below 1 nm with Coulomb "
                    "coupling on; collision regime is out of scope");
            const double f = ke * species[i].charge * species[j].charge /
                             (r * r * r);
            for (int k = 0; k < 3; ++k) {
                work[i].force[k] += f * d[k];
                work[j].force[k] -= f * d[k];
            }
            if (potential_out) {
                const double pe = ke * species[i].charge * species[j].charge / r;
                (*potential_out)[i] += 0.5 * pe;
                (*potential_out)[j] += 0.5 * pe;
            }
        }
    }
}

}  // namespace

std::vector<Trajectory> integrate(const std::vector<SpeciesState>& states,
                                  const FieldModel& field,
                                  const IntegrationOptions& options) {
    if (states.empty())
        throw std::invalid_argument("integrate: no particles");
    if (!(options.t_end > 0.0))
        throw std::domain_error("integrate: require t_end > 0");
    if (!(options.escape_radius > 0.0))
        throw std::domain_error("integrate: require escape_radius > 0");
    if (options.record_stride < 1)
        throw std::invalid_argument("integrate: record_stride must be >= 1");
    for (const auto& s : states) {
        if (!(s.mass > 0.0))
            throw std::domain_error("integrate: particle mass must be > 0");
        for (int k = 0; k < 3; ++k)
            if (!std::isfinite(s.position[k]) || !std::isfinite(s.velocity[k]))
                throw std::domain_error("integrate: non-finite initial state");
    }
    const double fastest = std::max(field.drive.electron_omega,
                                    field.drive.ion_omega);
    const double dt_max = (two_pi / fastest) / 50.0;
    if (!(options.dt > 0.0) || options.dt > dt_max)
        throw std::invalid_argument(
            "integrate: dt must satisfy 0 < dt <= (2 pi / Omega)/50 = " +
            std::to_string(dt_max) + " s for the fastest drive");

    const std::size_t n = states.size();
    std::vector<ParticleWork> work(n);
    for (std::size_t i = 0; i < n; ++i) {
        work[i].x = states[i].position;
        work[i].v = states[i].velocity;
    }
    std::vector<double> potentials(n, 0.0);
    std::vector<Trajectory> traj(n);

    const long n_steps = static_cast<long>(std::ceil(options.t_end / options.dt));
    const std::size_t reserve =
        static_cast<std::size_t>(n_steps / options.record_stride + 2);
    for (auto& tr : traj) {
        tr.times.reserve(reserve);
        tr.positions.reserve(reserve);
        tr.velocities.reserve(reserve);
        tr.energy_samples.reserve(reserve);
    }

    auto record = [&](double t) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!work[i].active) continue;
            traj[i].times.push_back(t);
            traj[i].positions.push_back(work[i].x);
            traj[i].velocities.push_back(work[i].v);
            const double ke = 0.5 * states[i].mass *
                              (work[i].v[0] * work[i].v[0] +
                               work[i].v[1] * work[i].v[1] +
                               work[i].v[2] * work[i].v[2]);
            traj[i].energy_samples.push_back(ke + potentials[i]);
        }
    };

    accumulate_forces(field, 0.0, states, work, &potentials);
    record(0.0);

    const double dt = options.dt;
    for (long step = 0; step < n_steps; ++step) {
        const double t = step * dt;
        // Half kick + drift.
        for (std::size_t i = 0; i < n; ++i) {
            if (!work[i].active) continue;
            const double c = 0.5 * dt / states[i].mass;
            for (int k = 0; k < 3; ++k) {
                work[i].v[k] += c * work[i].force[k];
                work[i].x[k] += dt * work[i].v[k];
            }
        }
        accumulate_forces(field, t + dt, states, work, &potentials);
        // Second half kick.
        for (std::size_t i = 0; i < n; ++i) {
            if (!work[i].active) continue;
            const double c = 0.5 * dt / states[i].mass;
            for (int k = 0; k < 3; ++k) work[i].v[k] += c * work[i].force[k];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (work[i].active && norm3(work[i].x) > options.escape_radius) {
                work[i].active = false;
                traj[i].bounded = false;
                traj[i].escape_time = t + dt;
            }
        }
        if ((step + 1) % options.record_stride == 0) record(t + dt);
        bool any_active = false;
        for (const auto& w : work) any_active = any_active || w.active;
        if (!any_active) break;
    }
    if (n_steps % options.record_stride != 0)
        record(n_steps * dt);  // final state for coarse recording strides
    return traj;
}

namespace {

// Iterative radix-2 complex FFT, in place; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double angle = -two_pi / static_cast<double>(len);
        const std::complex<double> wl(std::cos(angle), std::sin(angle));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const auto u = a[i + k];
                const auto v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

double extract_secular(const Trajectory& traj, Axis axis, double cutoff_omega,
                       int min_periods) {
    if (!traj.bounded)
        throw std::runtime_error("extract_secular: trajectory is unbounded");
    if (traj.times.size() < 64)
        throw std::runtime_error("extract_secular: record too short");
    if (!(cutoff_omega > 0.0))
        throw std::domain_error("extract_secular: require cutoff_omega > 0");

    const std::size_t n_raw = traj.times.size();
    const double dt = (traj.times.back() - traj.times.front()) /
                      static_cast<double>(n_raw - 1);
    std::size_t n = 1;
    while (n * 2 <= n_raw) n *= 2;

    const int ax = static_cast<int>(axis);
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += traj.positions[i][ax];
    mean /= static_cast<double>(n);

    std::vector<std::complex<double>> buf(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double w =
            0.5 * (1.0 - std::cos(two_pi * static_cast<double>(i) /
                                  static_cast<double>(n - 1)));
        buf[i] = w * (traj.positions[i][ax] - mean);
    }
    fft_pow2(buf);

    const double domega = two_pi / (static_cast<double>(n) * dt);
    std::size_t k_max = static_cast<std::size_t>(cutoff_omega / domega);
    k_max = std::min(k_max, n / 2 - 1);
    std::size_t best = 1;
    double best_p = 0.0;
    for (std::size_t k = 1; k <= k_max; ++k) {
        const double p = std::norm(buf[k]);
        if (p > best_p) {
            best_p = p;
            best = k;
        }
    }
    if (best_p == 0.0)
        throw std::runtime_error("extract_secular: no spectral peak below cutoff");

    // Parabolic interpolation on log power.
    double offset = 0.0;
    if (best > 1 && best + 1 <= n / 2 - 1) {
        const double p0 = std::log(std::max(std::norm(buf[best - 1]), 1e-300));
        const double p1 = std::log(best_p);
        const double p2 = std::log(std::max(std::norm(buf[best + 1]), 1e-300));
        const double denom = p0 - 2.0 * p1 + p2;
        if (denom != 0.0) offset = std::clamp(0.5 * (p0 - p2) / denom, -0.5, 0.5);
    }
    const double omega_peak = (static_cast<double>(best) + offset) * domega;

    const double duration = traj.times.back() - traj.times.front();
    const double needed = min_periods * two_pi / omega_peak;
    if (duration < needed)
        throw std::runtime_error(
            "extract_secular: record of " + std::to_string(duration) +
            " s too short; need >= " + std::to_string(needed) +
            " s (" + std::to_string(min_periods) + " periods of the peak)");
    return omega_peak;
}

StabilityScan scan_stability(const DriveConfig& drive_template, double r0,
                             const std::vector<double>& q_electron_grid,
                             const std::vector<double>& q_ion_grid,
                             int periods) {
    if (q_electron_grid.empty() || q_ion_grid.empty())
        throw std::invalid_argument("scan_stability: grids must be non-empty");
    if (periods < 100)
        throw std::invalid_argument("scan_stability: require periods >= 100");

    const double m_e = PhysicalConstants::electron_mass;
    const double e = PhysicalConstants::elementary_charge;
    StabilityScan scan;
    scan.q_electron_grid = q_electron_grid;
    scan.q_ion_grid = q_ion_grid;
    scan.bounded.resize(q_electron_grid.size() * q_ion_grid.size());

    for (std::size_t i = 0; i < q_electron_grid.size(); ++i) {
        for (std::size_t j = 0; j < q_ion_grid.size(); ++j) {
            DriveConfig drive = drive_template;
            drive.electron_amplitude = q_electron_grid[i] * m_e * r0 * r0 *
                                       drive.electron_omega *
                                       drive.electron_omega / (2.0 * e);
            drive.ion_amplitude = q_ion_grid[j] * m_e * r0 * r0 *
                                  drive.ion_omega * drive.ion_omega / (2.0 * e);
            const double slow = drive.ion_amplitude > 0.0
                                    ? drive.ion_omega
                                    : drive.electron_omega;
            IntegrationOptions opts;
            opts.t_end = periods * two_pi / slow;
            opts.dt = (two_pi / drive.electron_omega) / 200.0;
            opts.escape_radius = 10.0 * r0;
            opts.record_stride = 1 << 30;  // boundedness only
            const auto field = FieldModel::quadrupole(drive, r0);
            // Seed the x axis only: q_e and q_I are the one-axis stability
            // parameters, and the quadrupole axes decouple (the z axis
            // carries twice the drive and destabilizes first).
            const auto start =
                make_electron({0.01 * r0, 0.0, 0.0}, {0.0, 0.0, 0.0});
            const auto traj = integrate({start}, field, opts);
            scan.bounded[i * q_ion_grid.size() + j] = traj[0].bounded;
        }
    }
    return scan;
}

double coulomb_significance(double electron_energy_ev, const FieldModel& field,
                            double t_end, const CoulombCheckOptions& opts) {
    if (!(electron_energy_ev > 0.0))
        throw std::domain_error("coulomb_significance: require energy > 0");
    const double e = PhysicalConstants::elementary_charge;
    const double m_e = PhysicalConstants::electron_mass;
    const double speed =
        std::sqrt(2.0 * electron_energy_ev * e / m_e);
    const double radius = opts.orbit_radius > 0.0
                              ? opts.orbit_radius
                              : 0.5 * field.characteristic_dim();

    // Tangential launch: harmonic-orbit ellipses are centred on the origin,
    // so the electron never approaches the ion at the centre.
    SpeciesState electron = make_electron({radius, 0.0, 0.0}, {0.0, speed, 0.0});
    SpeciesState ion;
    ion.mass = opts.ion_mass > 0.0 ? opts.ion_mass
                                   : 40.0 * PhysicalConstants::atomic_mass_unit;
    ion.charge = opts.ion_charge_factor * e;
    ion.label = "ion";

    IntegrationOptions iopts;
    iopts.t_end = t_end;
    iopts.dt = (two_pi / std::max(field.drive.electron_omega,
                                  field.drive.ion_omega)) / 200.0;
    iopts.escape_radius = 10.0 * field.characteristic_dim();
    iopts.record_stride = opts.record_stride;

    FieldModel with = field;
    with.coulomb_coupling = true;
    FieldModel without = field;
    without.coulomb_coupling = false;

    const auto traj_on = integrate({electron, ion}, with, iopts);
    const auto traj_off = integrate({electron, ion}, without, iopts);

    const auto& on = traj_on[0];
    const auto& off = traj_off[0];
    const std::size_t n = std::min(on.positions.size(), off.positions.size());
    double max_div = 0.0;
    double max_amp = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        Vec3 d{on.positions[i][0] - off.positions[i][0],
               on.positions[i][1] - off.positions[i][1],
               on.positions[i][2] - off.positions[i][2]};
        max_div = std::max(max_div, norm3(d));
        max_amp = std::max(max_amp, norm3(off.positions[i]));
    }
    return max_amp > 0.0 ? max_div / max_amp : 0.0;
}

}  // namespace trapforge
