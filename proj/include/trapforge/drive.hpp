#pragma once

#include <string>
#include <utility>
#include <vector>

// Two-frequency drive model and stability analytics: waveform, quadrupole
// spatial factor, stability parameters, secular frequency, micromotion
// sidebands and parametric resonances.

namespace trapforge {

struct DriveConfig {
    double electron_amplitude = 0.0;  // V_e0 [V]
    double electron_omega = 0.0;      // Omega_e [rad/s]
    double ion_amplitude = 0.0;       // V_I0 [V]
    double ion_omega = 0.0;           // Omega_I [rad/s]
    double phase = 0.0;               // phi [rad], in [0, 2 pi)
};

// Enforces amplitudes >= 0, frequencies > 0, phase in [0, 2 pi).
void validate_drive(const DriveConfig& drive);

// V(t) = V_e0 cos(Omega_e t) + V_I0 cos(Omega_I t + phi).
double waveform(const DriveConfig& drive, double t);

// U(x, y, z) = (x^2 + y^2 - 2 z^2) / (2 r0^2); harmonic (Laplace-free).
double quadrupole_factor(double x, double y, double z, double r0);

// Stability parameter q = 2 e V0 / (m r0^2 Omega^2) for an arbitrary mass.
double stability_param(double mass, double amplitude, double omega, double r0);

// (q_e, q_I), both defined with the electron mass.
std::pair<double, double> stability_params(const DriveConfig& drive, double r0);

// omega = q Omega / (2 sqrt(2)).
double secular_frequency(double q, double omega_drive);

// gamma(n) = omega_secular + n Omega for n in [n_lo, n_hi]; signed values.
std::vector<double> sidebands(double omega_secular, double omega_drive,
                              int n_lo, int n_hi);

struct ParametricResonance {
    int n;
    double omega_res;  // [rad/s]
};

// Omega_res(n) = sqrt(sqrt(2) e V0 / (r0^2 m_e n)), n = 1..n_max.
std::vector<ParametricResonance> parametric_resonances(double amplitude,
                                                       double r0, int n_max);

struct ResonanceMargin {
    int n;
    double omega_res;           // [rad/s], from the electron amplitude
    double rel_dist_electron;   // |Omega_e - Omega_res| / Omega_res
    double rel_dist_ion;        // |Omega_I - Omega_res| / Omega_res
};

struct StabilityReport {
    double q_electron = 0.0;
    double q_ion = 0.0;
    double secular_electron = 0.0;  // omega_e [rad/s]
    std::vector<double> sidebands_electron;
    std::vector<double> sidebands_ion;
    std::vector<ResonanceMargin> resonance_margins;
    std::vector<std::string> warnings;
};

struct TwoFreqThresholds {
    double amplitude_ratio = 10.0;  // require V_e0 / V_I0 >= this
    double frequency_ratio = 10.0;  // require Omega_e / Omega_I >= this
    double q_limit = 0.9;
    double resonance_margin = 0.05;
    int n_max = 10;
    int sideband_range = 2;  // n in [-range, range]
};

StabilityReport validate_two_freq(const DriveConfig& drive, double r0,
                                  const TwoFreqThresholds& thresholds = {});

}  // namespace trapforge
