#pragma once

#include <vector>

#include "trapforge/species.hpp"

// Analytic model of the planar ring ("point") trap in the gapless-plane
// approximation: the geometry link between electrode radii and trap height,
// the steepness/depth shape functions of the radius ratio, and the on-axis
// potential and pseudopotential profile.

namespace trapforge {

struct RingGeometry {
    RingGeometry(double inner_radius, double outer_radius);

    double inner_radius;   // a [m]
    double outer_radius;   // b [m]
    double ratio;          // b / a

    // Field-null height of the gapless ring model.
    double height() const;
    // Characteristic trap dimension r0; defaults to the trap height.
    double characteristic_dim() const { return height(); }
};

struct AxialProfile {
    std::vector<double> z;               // [m]
    std::vector<double> pseudopotential; // [J]
    double field_null_height = 0.0;      // h [m]
    double turning_point = 0.0;          // z_max [m]
    double depth = 0.0;                  // D [J]
    double steepness = 0.0;              // S = D / (z_max - h) [J/m]
    double secular_frequency = 0.0;      // sqrt(Psi''(h)/m) [rad/s]
};

// h(a, b): solves the on-axis field null, h = a r^(2/3) / sqrt(1 + r^(2/3)).
double height_from_radii(double inner_radius, double outer_radius);

// Inverse of height_from_radii at fixed ratio r = b/a.
double inner_radius_for_height(double height, double ratio);

// Shape of the pseudopotential steepness as a function of r = b/a alone
// (overall scale factors in h, V0, Omega dropped). Defined for r > 1.
double steepness_shape(double ratio);

// Shape of the trap depth, D(r) ~ r^(4/3) (r^(4/5)-1)^5 /
// ((r^(2/3)+1)(r^2-1)^3). Defined for r > 1.
double depth_shape(double ratio);

enum class RingMetric { steepness, depth };

// Derivative-free 1-D maximization of the chosen shape function on
// (r_lo, r_hi). Throws if the sampled maximum sits on the interval boundary.
double optimize_ratio(RingMetric metric, double r_lo, double r_hi,
                      double tolerance);

// Phi(z) = V (z/sqrt(a^2+z^2) - z/sqrt(b^2+z^2)) for z >= 0.
double on_axis_potential(const RingGeometry& geom, double applied_voltage,
                         double z);

// E_z(z) = -dPhi/dz in closed form.
double on_axis_field(const RingGeometry& geom, double applied_voltage,
                     double z);

// Pseudopotential Psi_p(z) = q^2 E_z(z)^2 / (4 m Omega^2) sampled on z_grid,
// with the field null, turning point, depth and steepness extracted from a
// locally refined quadratic fit. The grid must be strictly increasing and
// span [0, >= 5 b].
AxialProfile pseudopotential_profile(const RingGeometry& geom,
                                     double amplitude, double angular_frequency,
                                     double mass, double charge,
                                     const std::vector<double>& z_grid);

AxialProfile pseudopotential_profile(const RingGeometry& geom,
                                     double amplitude, double angular_frequency,
                                     const SpeciesState& species,
                                     const std::vector<double>& z_grid);

}  // namespace trapforge
