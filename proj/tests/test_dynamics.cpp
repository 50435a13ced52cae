#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trapforge/constants.hpp"
#include "trapforge/dynamics.hpp"

using namespace trapforge;
using pc = PhysicalConstants;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Single-frequency electron drive with the requested stability parameter.
DriveConfig drive_for_q(double q, double omega, double r0) {
    DriveConfig d;
    d.electron_omega = omega;
    d.ion_omega = omega / 100.0;
    d.electron_amplitude =
        q * pc::electron_mass * r0 * r0 * omega * omega /
        (2.0 * pc::elementary_charge);
    return d;
}

Trajectory electron_run(double q, double periods, int steps_per_period,
                        int record_stride = 1) {
    const double r0 = 1e-3;
    const double omega = two_pi * 1e9;
    const auto drive = drive_for_q(q, omega, r0);
    IntegrationOptions opts;
    opts.t_end = periods * two_pi / omega;
    opts.dt = (two_pi / omega) / steps_per_period;
    opts.escape_radius = 10.0 * r0;
    opts.record_stride = record_stride;
    const auto field = FieldModel::quadrupole(drive, r0);
    const auto start = make_electron({1e-5, 0.0, 0.0}, {0.0, 0.0, 0.0});
    return integrate({start}, field, opts)[0];
}

}  // namespace

TEST_CASE("zero drive gives free flight") {
    DriveConfig d{0.0, two_pi * 1e9, 0.0, two_pi * 1e7, 0.0};
    const auto field = FieldModel::quadrupole(d, 1e-3);
    SpeciesState s = make_electron({1e-5, 0.0, 0.0}, {3.0, -2.0, 1.0});
    IntegrationOptions opts;
    opts.t_end = 100.0 * two_pi / d.electron_omega;
    opts.dt = (two_pi / d.electron_omega) / 100.0;
    opts.escape_radius = 1.0;
    const auto traj = integrate({s}, field, opts)[0];
    CHECK(traj.bounded);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const double t = traj.times[i];
        CHECK(std::abs(traj.positions[i][0] - (1e-5 + 3.0 * t)) <=
              1e-10 * std::abs(1e-5 + 3.0 * t));
        CHECK(std::abs(traj.positions[i][1] + 2.0 * t) <= 1e-10 * (2.0 * t + 1e-30));
    }
}

TEST_CASE("secular frequency extraction against the synthetic signal") {
    Trajectory traj;
    const double f = 1e6;
    const double dt = 1e-9;
    for (int i = 0; i < 262144; ++i) {
        traj.times.push_back(i * dt);
        traj.positions.push_back({std::cos(two_pi * f * i * dt), 0.0, 0.0});
        traj.velocities.push_back({0.0, 0.0, 0.0});
        traj.energy_samples.push_back(0.0);
    }
    const double peak = extract_secular(traj, Axis::x, two_pi * 1e8);
    CHECK(rel(peak, two_pi * f) < 1e-3);
}

TEST_CASE("driven electron at q = 0.2 stays bounded with the expected tone" *
          doctest::timeout(120)) {
    const auto traj = electron_run(0.2, 2200.0, 200, 4);
    REQUIRE(traj.bounded);
    const double omega = two_pi * 1e9;
    const double predicted = 0.2 * omega / (2.0 * std::sqrt(2.0));
    const double measured = extract_secular(traj, Axis::x, omega / 2.0);
    CHECK(rel(measured, predicted) < 0.05);
}

TEST_CASE("low-q runs track the first-order secular formula" *
          doctest::timeout(240)) {
    const double omega = two_pi * 1e9;
    // q = 0.1: within 2% of the first-order value.
    const auto t01 = electron_run(0.1, 4300.0, 200, 8);
    REQUIRE(t01.bounded);
    const double m01 = extract_secular(t01, Axis::x, omega / 2.0);
    const double p01 = 0.1 * omega / (2.0 * std::sqrt(2.0));
    CHECK(rel(m01, p01) < 0.02);

    // q = 0.5: the first-order formula degrades.
    const auto t05 = electron_run(0.5, 900.0, 200, 2);
    REQUIRE(t05.bounded);
    const double m05 = extract_secular(t05, Axis::x, omega / 2.0);
    const double p05 = 0.5 * omega / (2.0 * std::sqrt(2.0));
    CHECK(rel(m05, p05) > rel(m01, p01));
}

TEST_CASE("q = 1.5 blows up within 200 drive periods") {
    const auto traj = electron_run(1.5, 200.0, 200);
    CHECK(!traj.bounded);
    REQUIRE(traj.escape_time.has_value());
    CHECK(*traj.escape_time < 200.0 * two_pi / (two_pi * 1e9));
}

TEST_CASE("stability scan brackets the single-frequency boundary" *
          doctest::timeout(240)) {
    DriveConfig d = drive_for_q(0.0, two_pi * 1e9, 1e-3);
    const std::vector<double> q_e = {0.5, 0.7, 0.8, 0.95, 1.05, 1.3};
    const std::vector<double> q_i = {0.0};
    const auto scan = scan_stability(d, 1e-3, q_e, q_i, 400);
    REQUIRE(scan.bounded.size() == q_e.size());
    CHECK(scan.bounded[0]);
    CHECK(scan.bounded[1]);
    CHECK(scan.bounded[2]);
    CHECK(!scan.bounded[4]);
    CHECK(!scan.bounded[5]);
    // First unstable value sits between 0.8 and 1.0 (the known edge ~0.91).
    std::size_t first_unstable = q_e.size();
    for (std::size_t i = 0; i < q_e.size(); ++i)
        if (!scan.bounded[i]) {
            first_unstable = i;
            break;
        }
    REQUIRE(first_unstable < q_e.size());
    CHECK(q_e[first_unstable] > 0.8);
    CHECK(q_e[first_unstable] <= 1.05);
}

TEST_CASE("all-zero scan grid is trivially bounded") {
    DriveConfig d = drive_for_q(0.0, two_pi * 1e9, 1e-3);
    const auto scan = scan_stability(d, 1e-3, {0.0}, {0.0}, 120);
    CHECK(scan.bounded[0]);
}

TEST_CASE("two-frequency point with modest parameters stays bounded") {
    DriveConfig d = drive_for_q(0.0, two_pi * 1e9, 1e-3);
    const auto scan = scan_stability(d, 1e-3, {0.3}, {0.0, 0.05}, 150);
    CHECK(scan.bounded[0]);
    CHECK(scan.bounded[1]);
}

TEST_CASE("time reversal returns to the initial state") {
    const double r0 = 1e-3;
    const double omega = two_pi * 1e9;
    const auto drive = drive_for_q(0.3, omega, r0);
    const auto field = FieldModel::quadrupole(drive, r0);
    IntegrationOptions opts;
    opts.t_end = 10.0 * two_pi / omega;  // whole periods: V(t) symmetric
    opts.dt = (two_pi / omega) / 200.0;
    opts.escape_radius = 10.0 * r0;
    opts.record_stride = 1 << 30;

    SpeciesState start = make_electron({2e-5, -1e-5, 3e-5}, {10.0, 5.0, -8.0});
    auto fwd = integrate({start}, field, opts)[0];
    SpeciesState back;
    back.mass = start.mass;
    back.charge = start.charge;
    back.position = fwd.positions.back();
    back.velocity = {-fwd.velocities.back()[0], -fwd.velocities.back()[1],
                     -fwd.velocities.back()[2]};
    auto rev = integrate({back}, field, opts)[0];
    for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(rev.positions.back()[k] - start.position[k]) <=
              1e-6 * (std::abs(start.position[k]) + 1e-12));
        CHECK(std::abs(rev.velocities.back()[k] + start.velocity[k]) <=
              1e-6 * (std::abs(start.velocity[k]) + 1e-9));
    }
}

TEST_CASE("quadrupole axes decouple") {
    const double r0 = 1e-3;
    const double omega = two_pi * 1e9;
    const auto drive = drive_for_q(0.3, omega, r0);
    const auto field = FieldModel::quadrupole(drive, r0);
    IntegrationOptions opts;
    opts.t_end = 50.0 * two_pi / omega;
    opts.dt = (two_pi / omega) / 100.0;
    opts.escape_radius = 10.0 * r0;
    const auto traj =
        integrate({make_electron({1e-5, 0.0, 0.0}, {0.0, 0.0, 0.0})}, field,
                  opts)[0];
    double x_amp = 0.0, leak = 0.0;
    for (const auto& x : traj.positions) {
        x_amp = std::max(x_amp, std::abs(x[0]));
        leak = std::max({leak, std::abs(x[1]), std::abs(x[2])});
    }
    CHECK(leak < 1e-10 * x_amp);
}

TEST_CASE("halving dt shows at least second-order convergence") {
    const double r0 = 1e-3;
    const double omega = two_pi * 1e9;
    const auto drive = drive_for_q(0.3, omega, r0);
    const auto field = FieldModel::quadrupole(drive, r0);

    auto final_x = [&](int steps_per_period) {
        IntegrationOptions opts;
        opts.t_end = 20.0 * two_pi / omega;
        opts.dt = (two_pi / omega) / steps_per_period;
        opts.escape_radius = 10.0 * r0;
        opts.record_stride = 1 << 30;
        return integrate({make_electron({1e-5, 0.0, 0.0}, {0.0, 0.0, 0.0})},
                         field, opts)[0]
            .positions.back()[0];
    };
    const double x1 = final_x(100);
    const double x2 = final_x(200);
    const double x4 = final_x(400);
    const double order = std::log2(std::abs(x1 - x2) / std::abs(x2 - x4));
    CHECK(order >= 1.9);
}

TEST_CASE("integration guards") {
    DriveConfig d{10.0, two_pi * 1e9, 0.0, two_pi * 1e7, 0.0};
    const auto field = FieldModel::quadrupole(d, 1e-3);
    IntegrationOptions opts;
    opts.t_end = 1e-7;
    opts.dt = (two_pi / d.electron_omega) / 10.0;  // too coarse
    opts.escape_radius = 1e-2;
    CHECK_THROWS_WITH_AS(
        integrate({make_electron({0, 0, 0}, {0, 0, 0})}, field, opts),
        doctest::Contains("dt"), std::invalid_argument);

    // Coulomb overlap error.
    opts.dt = (two_pi / d.electron_omega) / 200.0;
    auto coulomb_field = FieldModel::quadrupole(d, 1e-3, true);
    SpeciesState a = make_electron({0.0, 0.0, 0.0}, {0, 0, 0});
    SpeciesState b = make_electron({5e-10, 0.0, 0.0}, {0, 0, 0});
    CHECK_THROWS_WITH_AS(integrate({a, b}, coulomb_field, opts),
                         doctest::Contains("1 nm"), std::runtime_error);
}

TEST_CASE("Coulomb significance harness" * doctest::timeout(240)) {
    const double r0 = 1.8e-3;
    const double omega_e = two_pi * 3e8;
    // Circular secular orbit at 1.2 mm for a 10 meV electron.
    const double speed = std::sqrt(2.0 * 0.01 * pc::elementary_charge /
                                   pc::electron_mass);
    const double orbit = 1.2e-3;
    const double omega_sec = speed / orbit;
    const double q = 2.0 * std::sqrt(2.0) * omega_sec / omega_e;
    DriveConfig d = drive_for_q(q, omega_e, r0);
    const auto field = FieldModel::quadrupole(d, r0);
    const double t_end = 100.0 * two_pi / omega_sec;

    CoulombCheckOptions opts;
    opts.orbit_radius = orbit;

    SUBCASE("10 meV orbit diverges below the 10% significance threshold") {
        const double div = coulomb_significance(0.01, field, t_end, opts);
        CHECK(div < 0.10);
        CHECK(div > 0.0);
    }
    SUBCASE("zero ion charge gives exactly zero divergence") {
        CoulombCheckOptions neutral = opts;
        neutral.ion_charge_factor = 0.0;
        CHECK(coulomb_significance(0.01, field, t_end, neutral) == 0.0);
    }
}
