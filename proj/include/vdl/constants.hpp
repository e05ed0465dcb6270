#pragma once

#include <numbers>

namespace vdl::constants
{
    // CODATA 2018
    inline constexpr double speed_of_light = 2.99792458e8;        // m/s
    inline constexpr double hbar = 1.054571817e-34;                // J s
    inline constexpr double vacuum_permittivity = 8.8541878128e-12; // F/m
    inline constexpr double elementary_charge = 1.602176634e-19;   // C

    inline constexpr double euler_gamma = 0.57721566490153286;
    inline constexpr double pi = std::numbers::pi;
}
