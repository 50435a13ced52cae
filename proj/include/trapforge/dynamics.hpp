#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "trapforge/drive.hpp"
#include "trapforge/geometry.hpp"
#include "trapforge/species.hpp"

// Time-domain integration of charged particles in the two-frequency trap
// field (quadrupole or on-axis ring model), optional electron-ion Coulomb
// interaction, boundedness classification and secular-frequency extraction.

namespace trapforge {

struct FieldModel {
    enum class Kind { quadrupole, ring_axis };

    Kind kind = Kind::quadrupole;
    DriveConfig drive;
    double r0 = 0.0;                   // quadrupole characteristic dimension
    std::optional<RingGeometry> ring;  // ring_axis geometry
    bool coulomb_coupling = false;

    static FieldModel quadrupole(const DriveConfig& drive, double r0,
                                 bool coulomb = false);
    // Exact on-axis ring field; forces act along z only (valid on axis).
    static FieldModel ring_axis(const RingGeometry& geom,
                                const DriveConfig& drive, bool coulomb = false);

    double characteristic_dim() const;
};

struct Trajectory {
    std::vector<double> times;        // [s]
    std::vector<Vec3> positions;      // [m]
    std::vector<Vec3> velocities;     // [m/s]
    std::vector<double> energy_samples;  // kinetic + instantaneous potential [J]
    bool bounded = true;
    std::optional<double> escape_time;  // [s]
};

struct IntegrationOptions {
    double t_end = 0.0;          // [s]
    double dt = 0.0;             // [s]; must resolve the fastest drive
    double escape_radius = 0.0;  // [m]
    int record_stride = 1;       // store every k-th step
};

// Velocity-Verlet integration of all particles; one trajectory per particle.
// A particle crossing escape_radius is frozen and flagged unbounded.
std::vector<Trajectory> integrate(const std::vector<SpeciesState>& states,
                                  const FieldModel& field,
                                  const IntegrationOptions& options);

enum class Axis { x = 0, y = 1, z = 2 };

// Dominant spectral peak of the chosen coordinate below cutoff_omega
// (Hann-windowed periodogram, parabolic peak interpolation). Requires a
// bounded trajectory covering at least min_periods of the returned peak.
double extract_secular(const Trajectory& traj, Axis axis, double cutoff_omega,
                       int min_periods = 50);

struct StabilityScan {
    std::vector<double> q_electron_grid;
    std::vector<double> q_ion_grid;
    // Row-major over q_electron: entry [i * n_ion + j].
    std::vector<bool> bounded;
};

// For each (q_e, q_I) the amplitudes are set by inverting the stability
// parameters and a single electron started off-centre is integrated for
// `periods` of the slower active drive.
StabilityScan scan_stability(const DriveConfig& drive_template, double r0,
                             const std::vector<double>& q_electron_grid,
                             const std::vector<double>& q_ion_grid,
                             int periods);

struct CoulombCheckOptions {
    double orbit_radius = 0.0;   // 0 -> default 0.5 * characteristic dim
    double ion_charge_factor = 2.0;  // in units of e (Ca2+ default)
    double ion_mass = 0.0;       // 0 -> default 40 u
    int record_stride = 4;
};

// Integrates an electron orbiting an ion at the trap centre twice, with the
// Coulomb interaction on and off, from identical initial conditions; returns
// the maximum trajectory divergence relative to the orbit amplitude.
double coulomb_significance(double electron_energy_ev, const FieldModel& field,
                            double t_end, const CoulombCheckOptions& opts = {});

}  // namespace trapforge
