#pragma once

#include <vector>

#include "trapforge/drive.hpp"

// Radial eigensolver for an electron in the combined Coulomb + trap
// pseudopotential Psi(r) = -Z/r + (1/2) omega^2 r^2 (atomic units, electron
// mass = 1), producing the hydrogenic-to-harmonic level ladder, region
// classification, transition energies and tuning curves.

namespace trapforge {

enum class KnotLayout { linear, geometric, mixed };

struct BasisSpec {
    int order = 7;
    int count = 240;  // number of unknowns after Dirichlet conditions
    KnotLayout layout = KnotLayout::mixed;
};

struct RadialProblem {
    double core_charge = 2.0;   // Z
    double omega = 0.0;         // [a.u.]
    int angular_momentum = 0;   // l
    double box_radius = 0.0;    // R_max [a.u.]
    BasisSpec basis;
};

void validate_problem(const RadialProblem& problem);

struct LevelLadder {
    std::vector<double> energies;  // ascending [a.u.]
    RadialProblem problem;
    int converged_count = 0;  // leading levels stable under basis refinement
};

// Psi(r) = -Z/r + (1/2) omega^2 r^2; r must be positive.
double potential(double core_charge, double omega, double r);

// Radius where the Coulomb and trap contributions pull equally hard,
// (Z/omega^2)^(1/3); marks the centre of the transition region.
double crossover_radius(double core_charge, double omega);

// Lowest `count` eigenvalues of -1/2 u'' + [l(l+1)/(2r^2) + Psi(r)] u = E u
// with u(0) = u(R_max) = 0; converged_count is determined by re-solving with
// the basis enlarged 1.5x and flagging levels stable to 1e-8 relative.
LevelLadder eigenlevels(const RadialProblem& problem, int count);

struct SpacingProfile {
    std::vector<double> spacing;  // spacing[i] = E[i+1] - E[i]
    int min_index = -1;           // index of the smallest gap; -1 when flat
    bool flat = false;
};

SpacingProfile spacing_profile(const LevelLadder& ladder);

struct RegionBoundaries {
    double energy_low = 0.0;   // [a.u.], upper edge of the Coulomb region
    double energy_high = 0.0;  // [a.u.], lower edge of the harmonic region
    double radius_low = 0.0;   // [a.u.]
    double radius_high = 0.0;  // [a.u.]
};

// Scans r for where the combined potential deviates from the pure Coulomb
// (resp. pure harmonic) part by more than `deviation` (default 10%).
RegionBoundaries classify_regions(double core_charge, double omega,
                                  double deviation = 0.10);

// E[index + delta] - E[index]; both levels must be converged.
double transition_energy(const LevelLadder& ladder, int index, int delta = 1);

// Secular frequency of the electron drive in SI [rad/s]; the omega fed to
// RadialProblem when derived from trap parameters (convert via si_to_au).
double omega_from_drive(const DriveConfig& drive, double r0);

struct TuningCurve {
    std::vector<double> amplitudes;           // V [V]
    std::vector<double> relative_transition;  // dE(V) / dE(V_ref)
};

// Re-solves the ladder across the amplitude grid with omega scaled through
// omega_from_drive and returns the Delta n = 1 transition energy at
// state_index, normalized at V_ref (which must be a grid point).
TuningCurve tuning_curve(const RadialProblem& base, const DriveConfig& drive,
                         double r0, int state_index,
                         const std::vector<double>& amplitude_grid,
                         double amplitude_ref);

}  // namespace trapforge
