#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "trapforge/constants.hpp"

using namespace trapforge;
using pc = PhysicalConstants;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("planck constant is exactly 2 pi hbar as stored") {
    CHECK(pc::planck == two_pi * pc::reduced_planck);
}

TEST_CASE("conversion anchors map to unity") {
    CHECK(si_to_au({pc::bohr_radius, Dimension::length}).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(si_to_au({pc::hartree_energy, Dimension::energy}).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(si_to_au({pc::au_time, Dimension::time}).value ==
          doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("angular frequency 2 pi x 8.8 MHz in atomic units") {
    const double omega = two_pi * 8.8e6;
    // omega * au_time, evaluated by hand from the CODATA atomic time unit.
    const double expected = 1.337450e-9;
    CHECK(rel(si_to_au({omega, Dimension::angular_frequency}).value, expected) <
          1e-5);
}

TEST_CASE("si/au round trip is exact to 1e-12 relative") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> mag(-12.0, 12.0);
    const Dimension dims[] = {Dimension::length, Dimension::energy,
                              Dimension::angular_frequency, Dimension::time};
    for (int i = 0; i < 200; ++i) {
        for (Dimension d : dims) {
            const double v = std::pow(10.0, mag(rng));
            const double back = au_to_si(si_to_au({v, d})).value;
            CHECK(rel(back, v) < 1e-12);
        }
    }
}

TEST_CASE("unsupported dimension names the dimension") {
    CHECK_THROWS_WITH_AS(si_to_au({1.0, Dimension::voltage}),
                         doctest::Contains("voltage"), std::invalid_argument);
    CHECK_THROWS_AS(au_to_si({1.0, Dimension::temperature}),
                    std::invalid_argument);
}

TEST_CASE("skin depth reproduces the copper microwave value") {
    // ~1.3 um for copper-like resistivity at 2.4 GHz.
    const double delta = skin_depth(1.7e-8, two_pi * 2.4e9);
    CHECK(rel(delta, 1.3e-6) < 0.10);
}

TEST_CASE("skin depth scales as sqrt(resistivity)") {
    const double omega = two_pi * 7.3e6;
    const double d1 = skin_depth(1.7e-8, omega);
    const double d2 = skin_depth(4.0 * 1.7e-8, omega);
    CHECK(rel(d2, 2.0 * d1) < 1e-12);
}

TEST_CASE("skin depth at 7.3 MHz matches the hand evaluation") {
    CHECK(rel(skin_depth(2.4e-8, two_pi * 7.3e6), 2.8858e-5) < 1e-4);
}

TEST_CASE("skin_depth * sqrt(omega) is independent of omega") {
    const double rho = 2.4e-8;
    const double ref = skin_depth(rho, 1e6) * std::sqrt(1e6);
    for (double omega : {1e3, 1e5, 1e7, 1e9, 1e11}) {
        CHECK(rel(skin_depth(rho, omega) * std::sqrt(omega), ref) < 1e-12);
    }
}

TEST_CASE("skin depth rejects non-positive input") {
    CHECK_THROWS_AS(skin_depth(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(skin_depth(1e-8, -1.0), std::domain_error);
}
