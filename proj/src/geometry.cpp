#include "trapforge/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace trapforge {

RingGeometry::RingGeometry(double a, double b)
    : inner_radius(a), outer_radius(b), ratio(b / a) {
    if (!(a > 0.0) || !(b > a))
        throw std::domain_error("RingGeometry: require b > a > 0");
}

double RingGeometry::height() const {
    return height_from_radii(inner_radius, outer_radius);
}

double height_from_radii(double a, double b) {
    if (!(a > 0.0) || !(b > a))
        throw std::domain_error("height_from_radii: require b > a > 0");
    const double r23 = std::pow(b / a, 2.0 / 3.0);
    return a * r23 / std::sqrt(1.0 + r23);
}

double inner_radius_for_height(double h, double r) {
    if (!(h > 0.0))
        throw std::domain_error("inner_radius_for_height: require h > 0");
    if (!(r > 1.0))
        throw std::domain_error("inner_radius_for_height: require r > 1");
    const double r23 = std::pow(r, 2.0 / 3.0);
    return h * std::sqrt(1.0 + r23) / r23;
}

double steepness_shape(double r) {
    if (!(r > 1.0))
        throw std::domain_error("steepness_shape: require r > 1");
    const double r23 = std::pow(r, 2.0 / 3.0);
    const double r45 = std::pow(r, 4.0 / 5.0);
    const double r65 = std::pow(r, 6.0 / 5.0);
    const double numerator =
        std::pow(r, 8.0 / 5.0) * std::pow(r45 - 1.0, 11.0 / 2.0);
    const double gap = std::sqrt((r23 + 1.0) * (r65 - 1.0)) -
                       std::pow(r, 4.0 / 15.0) * std::sqrt(r45 - 1.0);
    return numerator / ((r23 + 1.0) * std::pow(r * r - 1.0, 3.0) * gap);
}

double depth_shape(double r) {
    if (!(r > 1.0))
        throw std::domain_error("depth_shape: require r > 1");
    const double r23 = std::pow(r, 2.0 / 3.0);
    const double r45 = std::pow(r, 4.0 / 5.0);
    return std::pow(r, 4.0 / 3.0) * std::pow(r45 - 1.0, 5.0) /
           ((r23 + 1.0) * std::pow(r * r - 1.0, 3.0));
}

namespace {

double shape_value(RingMetric metric, double r) {
    return metric == RingMetric::steepness ? steepness_shape(r)
                                           : depth_shape(r);
}

// Golden-section maximization on a bracketing interval.
double golden_max(RingMetric metric, double lo, double hi, double tol) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = shape_value(metric, c);
    double fd = shape_value(metric, d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = shape_value(metric, c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = shape_value(metric, d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double optimize_ratio(RingMetric metric, double r_lo, double r_hi,
                      double tolerance) {
    if (!(r_lo > 1.0) || !(r_hi > r_lo))
        throw std::domain_error("optimize_ratio: require 1 < r_lo < r_hi");
    if (!(tolerance > 0.0))
        throw std::domain_error("optimize_ratio: tolerance must be positive");

    // Coarse scan to bracket the interior maximum.
    const int n_scan = 64;
    int best = 0;
    double best_val = -1.0;
    for (int i = 0; i <= n_scan; ++i) {
        const double r = r_lo + (r_hi - r_lo) * i / n_scan;
        const double v = shape_value(metric, r);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }
    if (best == 0 || best == n_scan)
        throw std::runtime_error(
            "optimize_ratio: no interior maximum in (" + std::to_string(r_lo) +
            ", " + std::to_string(r_hi) + "); shape is monotone on the interval");

    const double lo = r_lo + (r_hi - r_lo) * (best - 1) / n_scan;
    const double hi = r_lo + (r_hi - r_lo) * (best + 1) / n_scan;
    return golden_max(metric, lo, hi, tolerance);
}

double on_axis_potential(const RingGeometry& geom, double applied_voltage,
                         double z) {
    if (z < 0.0)
        throw std::domain_error("on_axis_potential: require z >= 0");
    const double a = geom.inner_radius;
    const double b = geom.outer_radius;
    return applied_voltage *
           (z / std::sqrt(a * a + z * z) - z / std::sqrt(b * b + z * z));
}

double on_axis_field(const RingGeometry& geom, double applied_voltage,
                     double z) {
    if (z < 0.0)
        throw std::domain_error("on_axis_field: require z >= 0");
    const double a2 = geom.inner_radius * geom.inner_radius;
    const double b2 = geom.outer_radius * geom.outer_radius;
    return -applied_voltage * (a2 / std::pow(a2 + z * z, 1.5) -
                               b2 / std::pow(b2 + z * z, 1.5));
}

namespace {

// Quadratic vertex through three equally spaced samples; returns the offset
// of the vertex from x1 in units of the spacing.
double parabola_vertex_offset(double f0, double f1, double f2) {
    const double denom = f0 - 2.0 * f1 + f2;
    if (denom == 0.0) return 0.0;
    return 0.5 * (f0 - f2) / denom;
}

struct Extremum {
    double z;
    double value;
};

// Refine a grid extremum by re-sampling the analytic profile on a local fine
// grid and fitting a parabola through the best three points.
template <typename F>
Extremum refine_extremum(const F& psi, double z_lo, double z_hi, bool maximum) {
    const int n = 200;
    double best_z = z_lo;
    double best_v = psi(z_lo);
    const double sign = maximum ? 1.0 : -1.0;
    for (int i = 1; i <= n; ++i) {
        const double z = z_lo + (z_hi - z_lo) * i / n;
        const double v = psi(z);
        if (sign * v > sign * best_v) {
            best_v = v;
            best_z = z;
        }
    }
    const double h = (z_hi - z_lo) / n;
    const double f0 = psi(best_z - h);
    const double f1 = best_v;
    const double f2 = psi(best_z + h);
    const double off = parabola_vertex_offset(f0, f1, f2);
    const double z_fit = best_z + std::clamp(off, -1.0, 1.0) * h;
    return {z_fit, psi(z_fit)};
}

}  // namespace

AxialProfile pseudopotential_profile(const RingGeometry& geom,
                                     double amplitude, double angular_frequency,
                                     double mass, double charge,
                                     const std::vector<double>& z_grid) {
    if (!(amplitude > 0.0))
        throw std::domain_error("pseudopotential_profile: require V0 > 0");
    if (!(angular_frequency > 0.0))
        throw std::domain_error("pseudopotential_profile: require Omega > 0");
    if (!(mass > 0.0))
        throw std::domain_error("pseudopotential_profile: require mass > 0");
    if (z_grid.size() < 8)
        throw std::invalid_argument("pseudopotential_profile: grid too short");
    for (std::size_t i = 1; i < z_grid.size(); ++i)
        if (!(z_grid[i] > z_grid[i - 1]))
            throw std::invalid_argument(
                "pseudopotential_profile: grid must be strictly increasing");
    if (z_grid.front() > 1e-6 * geom.outer_radius ||
        z_grid.back() < 5.0 * geom.outer_radius)
        throw std::invalid_argument(
            "pseudopotential_profile: grid must span [0, >= 5 b]");

    const double prefactor = charge * charge /
                             (4.0 * mass * angular_frequency * angular_frequency);
    auto psi = [&](double z) {
        const double e = on_axis_field(geom, amplitude, z);
        return prefactor * e * e;
    };

    AxialProfile profile;
    profile.z = z_grid;
    profile.pseudopotential.resize(z_grid.size());
    for (std::size_t i = 0; i < z_grid.size(); ++i)
        profile.pseudopotential[i] = psi(z_grid[i]);

    // Locate the field null as the first interior local minimum; the global
    // minimum of the sampled profile sits in the 1/z^3 far tail instead.
    const auto& p = profile.pseudopotential;
    std::size_t i_min = 0;
    for (std::size_t i = 1; i + 1 < p.size(); ++i)
        if (p[i] <= p[i - 1] && p[i] <= p[i + 1]) {
            i_min = i;
            break;
        }
    if (i_min == 0)
        throw std::runtime_error(
            "pseudopotential_profile: minimum not bracketed; refine the grid");
    std::size_t i_max = i_min;
    double v_max = p[i_min];
    for (std::size_t i = i_min + 1; i < p.size(); ++i)
        if (p[i] > v_max) {
            v_max = p[i];
            i_max = i;
        }
    if (i_max == i_min || i_max + 1 >= p.size())
        throw std::runtime_error(
            "pseudopotential_profile: barrier maximum not bracketed; refine "
            "the grid or extend it beyond 5 b");

    const Extremum null_pt =
        refine_extremum(psi, z_grid[i_min - 1], z_grid[i_min + 1], false);
    const Extremum barrier =
        refine_extremum(psi, z_grid[i_max - 1], z_grid[i_max + 1], true);

    profile.field_null_height = null_pt.z;
    profile.turning_point = barrier.z;
    profile.depth = barrier.value - null_pt.value;
    profile.steepness = profile.depth / (barrier.z - null_pt.z);

    // Secular frequency from the curvature at the null.
    const double dz = 1e-4 * geom.outer_radius;
    const double curvature =
        (psi(null_pt.z + dz) - 2.0 * psi(null_pt.z) + psi(null_pt.z - dz)) /
        (dz * dz);
    profile.secular_frequency =
        curvature > 0.0 ? std::sqrt(curvature / mass) : 0.0;
    return profile;
}

AxialProfile pseudopotential_profile(const RingGeometry& geom,
                                     double amplitude, double angular_frequency,
                                     const SpeciesState& species,
                                     const std::vector<double>& z_grid) {
    return pseudopotential_profile(geom, amplitude, angular_frequency,
                                   species.mass, species.charge, z_grid);
}

}  // namespace trapforge
