#include "trapforge/drive.hpp"

#include <cmath>
#include <stdexcept>

#include "trapforge/constants.hpp"

namespace trapforge {

void validate_drive(const DriveConfig& drive) {
    if (drive.electron_amplitude < 0.0 || drive.ion_amplitude < 0.0)
        throw std::domain_error("DriveConfig: amplitudes must be >= 0");
    if (!(drive.electron_omega > 0.0) || !(drive.ion_omega > 0.0))
        throw std::domain_error("DriveConfig: angular frequencies must be > 0");
    if (drive.phase < 0.0 || drive.phase >= two_pi)
        throw std::domain_error("DriveConfig: phase must lie in [0, 2 pi)");
}

double waveform(const DriveConfig& drive, double t) {
    return drive.electron_amplitude * std::cos(drive.electron_omega * t) +
           drive.ion_amplitude * std::cos(drive.ion_omega * t + drive.phase);
}

double quadrupole_factor(double x, double y, double z, double r0) {
    if (!(r0 > 0.0))
        throw std::domain_error("quadrupole_factor: require r0 > 0");
    return (x * x + y * y - 2.0 * z * z) / (2.0 * r0 * r0);
}

double stability_param(double mass, double amplitude, double omega, double r0) {
    if (!(mass > 0.0))
        throw std::domain_error("stability_param: require mass > 0");
    if (!(r0 > 0.0))
        throw std::domain_error("stability_param: require r0 > 0");
    if (!(omega > 0.0))
        throw std::domain_error("stability_param: require Omega > 0");
    return 2.0 * PhysicalConstants::elementary_charge * amplitude /
           (mass * r0 * r0 * omega * omega);
}

std::pair<double, double> stability_params(const DriveConfig& drive,
                                           double r0) {
    const double m_e = PhysicalConstants::electron_mass;
    return {stability_param(m_e, drive.electron_amplitude,
                            drive.electron_omega, r0),
            stability_param(m_e, drive.ion_amplitude, drive.ion_omega, r0)};
}

double secular_frequency(double q, double omega_drive) {
    if (q < 0.0)
        throw std::domain_error("secular_frequency: require q >= 0");
    return q * omega_drive / (2.0 * std::sqrt(2.0));
}

std::vector<double> sidebands(double omega_secular, double omega_drive,
                              int n_lo, int n_hi) {
    if (n_lo > n_hi)
        throw std::invalid_argument("sidebands: require n_lo <= n_hi");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));
    for (int n = n_lo; n <= n_hi; ++n)
        out.push_back(omega_secular + n * omega_drive);
    return out;
}

std::vector<ParametricResonance> parametric_resonances(double amplitude,
                                                       double r0, int n_max) {
    if (!(amplitude > 0.0))
        throw std::domain_error("parametric_resonances: require V0 > 0");
    if (!(r0 > 0.0))
        throw std::domain_error("parametric_resonances: require r0 > 0");
    if (n_max < 1)
        throw std::domain_error("parametric_resonances: require n_max >= 1");
    const double base = std::sqrt(2.0) * PhysicalConstants::elementary_charge *
                        amplitude / (r0 * r0 * PhysicalConstants::electron_mass);
    std::vector<ParametricResonance> out;
    out.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        out.push_back({n, std::sqrt(base / n)});
    return out;
}

StabilityReport validate_two_freq(const DriveConfig& drive, double r0,
                                  const TwoFreqThresholds& thresholds) {
    validate_drive(drive);
    StabilityReport report;
    const auto [q_e, q_i] = stability_params(drive, r0);
    report.q_electron = q_e;
    report.q_ion = q_i;
    report.secular_electron = secular_frequency(q_e, drive.electron_omega);
    report.sidebands_electron =
        sidebands(report.secular_electron, drive.electron_omega,
                  -thresholds.sideband_range, thresholds.sideband_range);
    report.sidebands_ion =
        sidebands(report.secular_electron, drive.ion_omega,
                  -thresholds.sideband_range, thresholds.sideband_range);

    if (drive.ion_amplitude > 0.0 &&
        drive.electron_amplitude <
            thresholds.amplitude_ratio * drive.ion_amplitude)
        report.warnings.push_back(
            "amplitude ratio V_e0/V_I0 below " +
            std::to_string(thresholds.amplitude_ratio) +
            "; two-frequency separation requires V_e0 >> V_I0");
    if (drive.electron_omega <
        thresholds.frequency_ratio * drive.ion_omega)
        report.warnings.push_back(
            "frequency ratio Omega_e/Omega_I below " +
            std::to_string(thresholds.frequency_ratio) +
            "; two-frequency separation requires Omega_e >> Omega_I");
    if (q_e > thresholds.q_limit)
        report.warnings.push_back(
            "q_e = " + std::to_string(q_e) + " exceeds " +
            std::to_string(thresholds.q_limit) +
            "; electron drive is at or beyond the stability edge");
    if (q_i > thresholds.q_limit)
        report.warnings.push_back(
            "q_I = " + std::to_string(q_i) + " exceeds " +
            std::to_string(thresholds.q_limit));

    if (drive.electron_amplitude > 0.0) {
        const auto resonances =
            parametric_resonances(drive.electron_amplitude, r0, thresholds.n_max);
        for (const auto& res : resonances) {
            ResonanceMargin margin;
            margin.n = res.n;
            margin.omega_res = res.omega_res;
            margin.rel_dist_electron =
                std::abs(drive.electron_omega - res.omega_res) / res.omega_res;
            margin.rel_dist_ion =
                std::abs(drive.ion_omega - res.omega_res) / res.omega_res;
            report.resonance_margins.push_back(margin);
            if (margin.rel_dist_electron <= thresholds.resonance_margin)
                report.warnings.push_back(
                    "Omega_e within " +
                    std::to_string(100.0 * thresholds.resonance_margin) +
                    "% of parametric resonance n = " + std::to_string(res.n));
            if (margin.rel_dist_ion <= thresholds.resonance_margin)
                report.warnings.push_back(
                    "Omega_I within " +
                    std::to_string(100.0 * thresholds.resonance_margin) +
                    "% of parametric resonance n = " + std::to_string(res.n));
        }
    }
    return report;
}

}  // namespace trapforge
