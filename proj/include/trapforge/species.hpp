#pragma once

#include <array>
#include <string>

namespace trapforge {

using Vec3 = std::array<double, 3>;

struct SpeciesState {
    double mass = 0.0;    // [kg]
    double charge = 0.0;  // [C], signed
    Vec3 position{0.0, 0.0, 0.0};
    Vec3 velocity{0.0, 0.0, 0.0};
    std::string label;
};

SpeciesState make_electron(const Vec3& position, const Vec3& velocity);

}  // namespace trapforge
