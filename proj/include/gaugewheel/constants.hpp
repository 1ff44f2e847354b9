#pragma once

#include <numbers>

namespace gaugewheel::constants {

// CODATA 2018 exact / recommended values.
inline constexpr double hbar = 1.054571817e-34;            // J s
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

}  // namespace gaugewheel::constants
