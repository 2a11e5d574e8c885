#pragma once

// Physical constants, CODATA 2018. k_B, c and e are exact by SI definition.
namespace casimir::constants {

inline constexpr double hbar = 1.054571817e-34;          // J s
inline constexpr double k_boltzmann = 1.380649e-23;      // J/K
inline constexpr double c_light = 2.99792458e8;          // m/s
inline constexpr double electron_volt = 1.602176634e-19; // J

// 1 eV expressed as an angular frequency (rad/s), ~1.5192674e15.
inline constexpr double ev_to_rad_s = electron_volt / hbar;

inline constexpr double zeta3 = 1.2020569031595943; // Apery's constant

} // namespace casimir::constants
