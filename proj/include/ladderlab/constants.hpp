#pragma once

#include <numbers>

namespace ladderlab {

/// Euler's constant c.
inline constexpr double kEuler = 0.57721566490153286;
/// ln(2*pi).
inline constexpr double kLn2Pi = 1.8378770664093455;
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
/// 1 - c, the slope that appears in every segment law.
inline constexpr double kOneMinusEuler = 1.0 - kEuler;

}  // namespace ladderlab
