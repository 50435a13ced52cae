#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "numerov_oracle.hpp"
#include "trapforge/constants.hpp"
#include "trapforge/spectrum.hpp"

using namespace trapforge;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

RadialProblem hydrogenic_problem() {
    RadialProblem p;
    p.core_charge = 2.0;
    p.omega = 0.0;
    p.angular_momentum = 0;
    p.box_radius = 30.0;
    p.basis = {7, 110, KnotLayout::mixed};
    return p;
}

}  // namespace

TEST_CASE("potential evaluates the two limits") {
    CHECK(potential(2.0, 0.0, 1.0) == doctest::Approx(-2.0));
    CHECK(potential(0.0, 1.0, 2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(potential(2.0, 1.0, 0.0), std::domain_error);
}

TEST_CASE("crossover radius balances the Coulomb and trap forces") {
    const double z = 2.0, omega = 1e-3;
    // Numerically solve Z/r^2 = omega^2 r.
    double lo = 1.0, hi = 1e6;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (z / (mid * mid) > omega * omega * mid)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(rel(crossover_radius(z, omega), 0.5 * (lo + hi)) < 1e-9);
}

TEST_CASE("hydrogenic limit: Z = 2 levels match -Z^2/(2 n^2)") {
    const auto ladder = eigenlevels(hydrogenic_problem(), 3);
    REQUIRE(ladder.converged_count >= 3);
    CHECK(rel(ladder.energies[0], -2.0) < 1e-6);
    CHECK(rel(ladder.energies[1], -0.5) < 1e-6);
    CHECK(rel(ladder.energies[2], -2.0 / 9.0) < 1e-6);
}

TEST_CASE("hydrogenic l = 1 levels as a centrifugal-term check") {
    RadialProblem p = hydrogenic_problem();
    p.angular_momentum = 1;
    const auto ladder = eigenlevels(p, 2);
    REQUIRE(ladder.converged_count >= 2);
    // l = 1 states start at n = 2.
    CHECK(rel(ladder.energies[0], -0.5) < 1e-6);
    CHECK(rel(ladder.energies[1], -2.0 / 9.0) < 1e-6);
}

TEST_CASE("harmonic limit: s-state ladder spacing is exactly 2 omega") {
    RadialProblem p;
    p.core_charge = 0.0;
    p.omega = 1e-3;
    p.box_radius = 320.0;
    p.basis = {7, 200, KnotLayout::linear};
    const auto ladder = eigenlevels(p, 10);
    REQUIRE(ladder.converged_count >= 10);
    CHECK(rel(ladder.energies[0], 1.5e-3) < 1e-6);
    for (int i = 0; i + 1 < 10; ++i)
        CHECK(rel(ladder.energies[i + 1] - ladder.energies[i], 2e-3) < 1e-6);

    const auto profile = spacing_profile(ladder);
    CHECK(profile.flat);
    CHECK(profile.min_index == -1);
}

TEST_CASE("hydrogenic ladder spacing decreases toward threshold") {
    RadialProblem p = hydrogenic_problem();
    p.box_radius = 60.0;
    p.basis.count = 160;
    const auto ladder = eigenlevels(p, 5);
    REQUIRE(ladder.converged_count >= 5);
    const auto profile = spacing_profile(ladder);
    CHECK(!profile.flat);
    for (std::size_t i = 0; i + 1 < profile.spacing.size(); ++i)
        CHECK(profile.spacing[i + 1] < profile.spacing[i]);
}

TEST_CASE("combined potential matches the shooting oracle" *
          doctest::timeout(120)) {
    RadialProblem p;
    p.core_charge = 2.0;
    p.omega = 1e-4;
    p.box_radius = 1500.0;
    p.basis = {7, 700, KnotLayout::mixed};
    const int count = 50;
    const auto ladder = eigenlevels(p, count);
    REQUIRE(ladder.converged_count >= count);

    numerov_oracle::RadialShooter shooter(2.0, 1e-4, 1500.0);
    const auto oracle = shooter.levels(count);
    for (int i = 0; i < count; ++i) {
        const double scale =
            std::max({std::abs(oracle[i]), std::abs(ladder.energies[i]),
                      2.0 * p.omega});
        CHECK(std::abs(ladder.energies[i] - oracle[i]) <= 1e-6 * scale);
    }

    SUBCASE("spacing narrows from hydrogenic toward the harmonic value") {
        // The radial period at the threshold crossing is 2 pi/(3 omega), so
        // the gap there is 3 omega; above it the gaps keep shrinking toward
        // 2 omega from above. Verified against the shooting oracle; the gaps
        // never close, and never get below the harmonic spacing.
        const auto profile = spacing_profile(ladder);
        CHECK(!profile.flat);
        for (std::size_t i = 0; i + 1 < profile.spacing.size(); ++i)
            CHECK(profile.spacing[i + 1] < profile.spacing[i]);
        for (double gap : profile.spacing) CHECK(gap > 2.0 * p.omega);

        for (int i = 0; i + 1 < count; ++i)
            if (ladder.energies[i] < 0.0 && ladder.energies[i + 1] >= 0.0)
                CHECK(rel(profile.spacing[i], 3.0 * p.omega) < 5e-3);

        // The minimum-gap index is stable (+-2) under 1.5x basis refinement.
        RadialProblem fine = p;
        fine.basis.count = 1050;
        const auto fine_profile = spacing_profile(eigenlevels(fine, count));
        CHECK(std::abs(fine_profile.min_index - profile.min_index) <= 2);
    }

    SUBCASE("top-of-ladder line fit sits below the pure-harmonic intercept") {
        // Least squares on the top 20% of (index, energy).
        const int n = static_cast<int>(ladder.energies.size());
        const int start = n - std::max(2, n / 5);
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (int i = start; i < n; ++i) {
            sx += i;
            sy += ladder.energies[i];
            sxx += static_cast<double>(i) * i;
            sxy += i * ladder.energies[i];
            ++m;
        }
        const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        const double intercept = (sy - slope * sx) / m;
        // Pure harmonic ladder would intercept at E(0) = 1.5 omega; the
        // Coulomb well drags the fitted intercept far below it.
        CHECK(intercept < 1.5 * p.omega);
        CHECK(slope > 2.0 * p.omega);
        CHECK(slope < 3.0 * p.omega);
    }
}

TEST_CASE("asymptotic spacing reaches the harmonic value for a weak core" *
          doctest::timeout(120)) {
    // With a weak Coulomb admixture the gaps settle to 2 omega (within 1e-3)
    // well above the transition region, which sits at n ~ (Z^2/omega)^(1/3).
    RadialProblem p;
    p.core_charge = 0.02;
    p.omega = 1e-4;
    p.box_radius = 2400.0;
    p.basis = {7, 950, KnotLayout::mixed};
    const auto ladder = eigenlevels(p, 120);
    REQUIRE(ladder.converged_count >= 120);
    for (int i = 110; i < 119; ++i) {
        const double gap = ladder.energies[i + 1] - ladder.energies[i];
        CHECK(std::abs(gap - 2.0 * p.omega) / (2.0 * p.omega) < 1e-3);
    }
}

TEST_CASE("variational monotonicity under basis enlargement") {
    RadialProblem small = hydrogenic_problem();
    RadialProblem big = hydrogenic_problem();
    big.basis.count = 180;
    const auto lo = eigenlevels(small, 4);
    const auto hi = eigenlevels(big, 4);
    for (int i = 0; i < 4; ++i)
        CHECK(hi.energies[i] <= lo.energies[i] +
                                   1e-10 * std::abs(lo.energies[i]));
}

TEST_CASE("trap term raises every level above the bare-Coulomb bound") {
    RadialProblem p;
    p.core_charge = 2.0;
    p.omega = 1e-3;
    p.box_radius = 260.0;
    p.basis = {7, 200, KnotLayout::mixed};
    const auto ladder = eigenlevels(p, 5);
    REQUIRE(ladder.converged_count >= 1);
    CHECK(ladder.energies[0] > -0.5 * p.core_charge * p.core_charge);
}

TEST_CASE("hydrogenic limit with a vanishing trap term") {
    // omega chosen so the harmonic term at r = 2 n^2 / Z is < 1e-8 |E_n|.
    RadialProblem p = hydrogenic_problem();
    const int n_top = 3;
    const double r_top = 2.0 * n_top * n_top / p.core_charge;
    const double e_top = 2.0 / (n_top * n_top);
    p.omega = std::sqrt(2.0 * 1e-8 * e_top / (r_top * r_top)) * 0.9;
    p.box_radius = std::max(30.0, 8.0 / std::sqrt(p.omega));
    p.basis.count = 300;
    const auto ladder = eigenlevels(p, 3);
    REQUIRE(ladder.converged_count >= 3);
    for (int n = 1; n <= 3; ++n)
        CHECK(rel(ladder.energies[n - 1], -2.0 / (n * n)) < 1e-6);
}

TEST_CASE("region classification against the deviation conditions") {
    const double z = 2.0, omega = 1e-4;
    const auto rb = classify_regions(z, omega);
    CHECK(rb.radius_low < rb.radius_high);
    CHECK(rb.energy_low < rb.energy_high);
    // Direct bisection oracle: dev_C(r) = omega^2 r^3/(2Z) = 0.1 and
    // dev_P(r) = 2Z/(omega^2 r^3) = 0.1.
    const double r1 = std::cbrt(0.2 * z / (omega * omega));
    const double r3 = std::cbrt(20.0 * z / (omega * omega));
    CHECK(rel(rb.radius_low, r1) < 1e-6);
    CHECK(rel(rb.radius_high, r3) < 1e-6);
    CHECK(rel(rb.energy_low, potential(z, omega, r1)) < 1e-9);
    CHECK(rel(rb.energy_high, potential(z, omega, r3)) < 1e-9);

    // Limits: smaller omega pushes the Coulomb region outward (r ~ w^-2/3).
    const auto rb_small = classify_regions(z, omega / 1000.0);
    CHECK(rb_small.radius_low > 99.0 * rb.radius_low);
    CHECK_THROWS_AS(classify_regions(0.0, 1e-4), std::domain_error);
}

TEST_CASE("transition energies telescope") {
    const auto ladder = eigenlevels(hydrogenic_problem(), 4);
    REQUIRE(ladder.converged_count >= 3);
    CHECK(rel(transition_energy(ladder, 0, 1), 1.5) < 1e-5);
    CHECK(transition_energy(ladder, 0, 2) ==
          doctest::Approx(transition_energy(ladder, 0, 1) +
                          transition_energy(ladder, 1, 1)));
    CHECK_THROWS_AS(transition_energy(ladder, -1, 1), std::out_of_range);
    CHECK_THROWS_AS(transition_energy(ladder, 0, 99), std::out_of_range);
}

TEST_CASE("omega_from_drive composes the drive-module pieces bit-exactly") {
    DriveConfig d{88.0, two_pi * 2.37e9, 0.0, two_pi * 7e6, 0.0};
    const double r0 = 1.8e-3;
    const auto [q_e, q_i] = stability_params(d, r0);
    CHECK(omega_from_drive(d, r0) == secular_frequency(q_e, d.electron_omega));
    DriveConfig off = d;
    off.electron_amplitude = 0.0;
    CHECK(omega_from_drive(off, r0) == 0.0);
    // Linear in the amplitude.
    DriveConfig twice = d;
    twice.electron_amplitude *= 2.0;
    CHECK(rel(omega_from_drive(twice, r0), 2.0 * omega_from_drive(d, r0)) <
          1e-12);
}

TEST_CASE("tuning curves: harmonic states scale with V, Coulomb states do not" *
          doctest::timeout(240)) {
    // Synthetic drive fixed so omega_from_drive lands at 1e-3 a.u. for the
    // reference amplitude.
    const double omega_ref_au = 1e-3;
    const double omega_ref_si =
        au_to_si({omega_ref_au, Dimension::angular_frequency}).value;
    const double r0 = 1e-6;
    const double omega_e = two_pi * 5e10;
    const double m_e = PhysicalConstants::electron_mass;
    const double e = PhysicalConstants::elementary_charge;
    // omega_sec = e V /(sqrt(2) m r0^2 Omega)  =>  V for the target omega.
    const double v_ref =
        omega_ref_si * std::sqrt(2.0) * m_e * r0 * r0 * omega_e / e;
    DriveConfig drive{v_ref, omega_e, 0.0, two_pi * 1e6, 0.0};
    CHECK(rel(omega_from_drive(drive, r0), omega_ref_si) < 1e-12);

    const std::vector<double> grid = {0.5 * v_ref, 0.75 * v_ref, v_ref,
                                      1.25 * v_ref, 1.5 * v_ref};

    SUBCASE("deep harmonic state tracks V/V_ref within 2%") {
        RadialProblem base;
        base.core_charge = 2.0;
        base.omega = omega_ref_au;
        base.box_radius = 950.0;
        base.basis = {7, 760, KnotLayout::mixed};
        const auto curve = tuning_curve(base, drive, r0, 60, grid, v_ref);
        CHECK(curve.relative_transition[2] == doctest::Approx(1.0));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double expected = grid[i] / v_ref;
            CHECK(rel(curve.relative_transition[i], expected) < 0.02);
        }
    }
    SUBCASE("deep Coulomb state is flat within 1%") {
        RadialProblem base;
        base.core_charge = 2.0;
        base.omega = omega_ref_au;
        base.box_radius = 380.0;
        base.basis = {7, 220, KnotLayout::mixed};
        const auto curve = tuning_curve(base, drive, r0, 2, grid, v_ref);
        for (std::size_t i = 0; i < grid.size(); ++i)
            CHECK(std::abs(curve.relative_transition[i] - 1.0) < 0.01);
    }
    SUBCASE("reference must be on the grid") {
        RadialProblem base;
        base.core_charge = 2.0;
        base.omega = omega_ref_au;
        base.box_radius = 380.0;
        base.basis = {7, 220, KnotLayout::mixed};
        CHECK_THROWS_AS(tuning_curve(base, drive, r0, 2, grid, 1.03 * v_ref),
                        std::invalid_argument);
    }
}

TEST_CASE("problem validation rejects unusable inputs") {
    RadialProblem p;
    p.core_charge = 0.0;
    p.omega = 0.0;
    p.box_radius = 10.0;
    CHECK_THROWS_AS(validate_problem(p), std::domain_error);
    p.core_charge = 2.0;
    p.omega = 1e-4;
    p.box_radius = 10.0;  // below 8/sqrt(omega) = 800
    CHECK_THROWS_AS(validate_problem(p), std::domain_error);
    p.box_radius = 900.0;
    p.basis.count = 30;  // below 10 * order
    CHECK_THROWS_AS(validate_problem(p), std::domain_error);
}
