#include "trapforge/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace trapforge {

const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::length: return "length";
        case Dimension::frequency: return "frequency";
        case Dimension::angular_frequency: return "angular-frequency";
        case Dimension::energy: return "energy";
        case Dimension::temperature: return "temperature";
        case Dimension::voltage: return "voltage";
        case Dimension::resistivity: return "resistivity";
        case Dimension::spectral_density: return "spectral-density";
        case Dimension::rate: return "rate";
        case Dimension::time: return "time";
    }
    return "unknown";
}

namespace {

// Multiply an SI value by this factor to get atomic units.
double au_factor(Dimension d) {
    using pc = PhysicalConstants;
    switch (d) {
        case Dimension::length: return 1.0 / pc::bohr_radius;
        case Dimension::energy: return 1.0 / pc::hartree_energy;
        case Dimension::angular_frequency: return pc::au_time;
        case Dimension::time: return 1.0 / pc::au_time;
        default:
            throw std::invalid_argument(
                std::string("si_to_au: unsupported dimension '") +
                dimension_name(d) + "'");
    }
}

}  // namespace

Quantity si_to_au(const Quantity& q) {
    return {q.value * au_factor(q.dimension), q.dimension};
}

Quantity au_to_si(const Quantity& q) {
    return {q.value / au_factor(q.dimension), q.dimension};
}

double skin_depth(double resistivity, double angular_frequency) {
    if (resistivity <= 0.0)
        throw std::domain_error("skin_depth: resistivity must be positive");
    if (angular_frequency <= 0.0)
        throw std::domain_error("skin_depth: angular frequency must be positive");
    return std::sqrt(2.0 * resistivity /
                     (PhysicalConstants::vacuum_permeability * angular_frequency));
}

}  // namespace trapforge
