#pragma once

#include <numbers>

namespace casimir {

// SI exact defining values (CODATA 2018). hbar_c is derived at compile time so
// the consistency invariant hbar_c == hbar * light_speed holds bitwise.
struct physical_constants {
    static constexpr double boltzmann = 1.380649e-23;       // J/K
    static constexpr double hbar = 1.054571817e-34;         // J s
    static constexpr double light_speed = 299792458.0;      // m/s
    static constexpr double hbar_c = hbar * light_speed;    // J m

    // Apery's constant, zeta(3) = sum m^-3.
    static constexpr double zeta3 = 1.2020569031595942854;
    // zeta(2) = pi^2/6; used only inside certified tail bounds.
    static constexpr double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
};

inline constexpr double pi = std::numbers::pi;

} // namespace casimir
