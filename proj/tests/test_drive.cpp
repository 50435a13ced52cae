#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "trapforge/constants.hpp"
#include "trapforge/drive.hpp"

using namespace trapforge;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }
}  // namespace

TEST_CASE("waveform at t = 0 sums the amplitudes") {
    DriveConfig d{5.0, 1.0, 2.0, 0.1, 0.0};
    CHECK(waveform(d, 0.0) == doctest::Approx(7.0));
}

TEST_CASE("waveform reduces to a single cosine when V_I0 = 0") {
    DriveConfig d{3.0, 2.0, 0.0, 0.5, 0.0};
    for (double t : {0.1, 0.7, 2.9})
        CHECK(waveform(d, t) == doctest::Approx(3.0 * std::cos(2.0 * t)));
    // Periodicity in the electron drive.
    CHECK(waveform(d, 0.3) ==
          doctest::Approx(waveform(d, 0.3 + two_pi / 2.0)).epsilon(1e-12));
}

TEST_CASE("waveform hand-evaluated two-frequency point") {
    // V(pi) = 2 cos(3 pi) + 1 cos(pi + pi/2) = -2 + 0.
    DriveConfig d{2.0, 3.0, 1.0, 1.0, pi / 2.0};
    CHECK(waveform(d, pi) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("quadrupole factor values and harmonicity") {
    CHECK(quadrupole_factor(0.0, 0.0, 0.0, 1e-3) == 0.0);
    CHECK(quadrupole_factor(1e-3, 0.0, 0.0, 1e-3) == doctest::Approx(0.5));
    // Traceless structure: U(0,0,z) = -U(z, z, 0) at z = 1 mm.
    const double z = 1e-3, r0 = 2e-3;
    CHECK(quadrupole_factor(0.0, 0.0, z, r0) ==
          doctest::Approx(-quadrupole_factor(z, z, 0.0, r0)));
    // Discrete Laplacian vanishes.
    const double h = 1e-6;
    const double lap =
        quadrupole_factor(h, 0, 0, r0) + quadrupole_factor(-h, 0, 0, r0) +
        quadrupole_factor(0, h, 0, r0) + quadrupole_factor(0, -h, 0, r0) +
        quadrupole_factor(0, 0, h, r0) + quadrupole_factor(0, 0, -h, r0) -
        6.0 * quadrupole_factor(0, 0, 0, r0);
    CHECK(std::abs(lap) < 1e-15);
}

TEST_CASE("stability parameter scalings") {
    DriveConfig d{10.0, two_pi * 1e9, 0.0, two_pi * 1e6, 0.0};
    const double r0 = 1e-3;
    const auto [q1, qi1] = stability_params(d, r0);
    CHECK(qi1 == 0.0);

    DriveConfig d2 = d;
    d2.electron_amplitude *= 2.0;
    CHECK(rel(stability_params(d2, r0).first, 2.0 * q1) < 1e-12);

    DriveConfig d3 = d;
    d3.electron_omega *= 2.0;
    CHECK(rel(stability_params(d3, r0).first, q1 / 4.0) < 1e-12);
}

TEST_CASE("stability parameter for the 88 V / 2.37 GHz drive") {
    DriveConfig d{88.0, two_pi * 2.37e9, 0.0, two_pi * 7e6, 0.0};
    const auto [q_e, q_i] = stability_params(d, 1.8e-3);
    CHECK(rel(q_e, 0.0430856) < 1e-4);  // hand evaluation of 2 e V/(m r0^2 W^2)
    CHECK(q_i == 0.0);
}

TEST_CASE("secular frequency") {
    CHECK(secular_frequency(0.0, 5.0) == 0.0);
    CHECK(secular_frequency(2.0 * std::sqrt(2.0), 7.0) == doctest::Approx(7.0));
    CHECK_THROWS_AS(secular_frequency(-0.1, 1.0), std::domain_error);
}

TEST_CASE("sidebands form an arithmetic progression") {
    const double omega_e = 3.0, omega_d = 11.0;
    const auto g = sidebands(omega_e, omega_d, -2, 2);
    REQUIRE(g.size() == 5);
    CHECK(g[2] == doctest::Approx(omega_e));
    for (int i = 0; i < 4; ++i)
        CHECK(g[i + 1] - g[i] == doctest::Approx(omega_d));
    CHECK(g[0] == doctest::Approx(omega_e - 2.0 * omega_d));  // signed value
}

TEST_CASE("parametric resonances scale as 1/sqrt(n) and sqrt(V0)") {
    const auto res = parametric_resonances(88.0, 1.8e-3, 10);
    REQUIRE(res.size() == 10);
    CHECK(rel(res[3].omega_res, res[0].omega_res / 2.0) < 1e-12);

    // Hand evaluation of the n = 1 resonance for 88 V, 1.8 mm.
    CHECK(rel(res[0].omega_res, 2.59918e9) < 1e-4);

    const auto res4 = parametric_resonances(4.0 * 88.0, 1.8e-3, 1);
    CHECK(rel(res4[0].omega_res, 2.0 * res[0].omega_res) < 1e-12);

    // Omega_res(n) sqrt(n) constant to 1e-12.
    const double base = res[0].omega_res;
    for (const auto& r : res)
        CHECK(rel(r.omega_res * std::sqrt(static_cast<double>(r.n)), base) <
              1e-12);
}

TEST_CASE("two-frequency validation warnings") {
    const double r0 = 1.8e-3;

    SUBCASE("no amplitude warning when the ion drive is off") {
        DriveConfig d{88.0, two_pi * 2.37e9, 0.0, two_pi * 7e6, 0.0};
        const auto rep = validate_two_freq(d, r0);
        for (const auto& w : rep.warnings)
            CHECK(w.find("amplitude ratio") == std::string::npos);
        // omega_e in the report is the bit-exact composition of q and Omega.
        const auto [q_e, q_i] = stability_params(d, r0);
        CHECK(rep.secular_electron == secular_frequency(q_e, d.electron_omega));
    }

    SUBCASE("resonance proximity flagged at zero margin") {
        const auto res = parametric_resonances(88.0, r0, 1);
        DriveConfig d{88.0, res[0].omega_res, 0.0, two_pi * 7e6, 0.0};
        const auto rep = validate_two_freq(d, r0);
        bool found = false;
        for (const auto& w : rep.warnings)
            found = found || w.find("parametric resonance n = 1") != std::string::npos;
        CHECK(found);
    }

    SUBCASE("instability warning tracks q_e") {
        // Choose V so q_e = 1.2, then double Omega_e to bring it to 0.3.
        const double omega = two_pi * 1e9;
        const double m_e = PhysicalConstants::electron_mass;
        const double e = PhysicalConstants::elementary_charge;
        const double v = 1.2 * m_e * r0 * r0 * omega * omega / (2.0 * e);
        DriveConfig d{v, omega, 0.0, two_pi * 1e6, 0.0};
        auto rep = validate_two_freq(d, r0);
        bool warned = false;
        for (const auto& w : rep.warnings)
            warned = warned || w.find("stability edge") != std::string::npos;
        CHECK(warned);
        CHECK(rep.q_electron == doctest::Approx(1.2));

        d.electron_omega *= 2.0;
        rep = validate_two_freq(d, r0);
        CHECK(rep.q_electron == doctest::Approx(0.3));
        for (const auto& w : rep.warnings)
            CHECK(w.find("stability edge") == std::string::npos);
    }

    SUBCASE("amplitude ordering violation warns") {
        DriveConfig d{10.0, two_pi * 2.37e9, 100.0, two_pi * 7e6, 0.0};
        const auto rep = validate_two_freq(d, r0);
        bool found = false;
        for (const auto& w : rep.warnings)
            found = found || w.find("amplitude ratio") != std::string::npos;
        CHECK(found);
    }
}

TEST_CASE("drive validation rejects bad parameters") {
    CHECK_THROWS_AS(validate_drive({-1.0, 1.0, 0.0, 1.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(validate_drive({1.0, 0.0, 0.0, 1.0, 0.0}),
                    std::domain_error);
    CHECK_THROWS_AS(validate_drive({1.0, 1.0, 0.0, 1.0, 7.0}),
                    std::domain_error);
}
