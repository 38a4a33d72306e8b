#pragma once

#include <numbers>

// Physical constants (CODATA 2018) and unit helpers.
//
// Unit convention used throughout the library: every rate, detuning and
// coupling is an angular frequency in rad/s. Reported "Hz" values are
// value/(2*pi); CLI and file I/O use plain Hz with _hz suffixes.

namespace cavcool {

inline constexpr double pi = std::numbers::pi;

namespace constants {
inline constexpr double c_light = 299792458.0;        // m/s
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
}  // namespace constants

/// Plain frequency (Hz) -> angular frequency (rad/s).
inline constexpr double rad_from_hz(double hz) { return 2.0 * pi * hz; }

/// Angular frequency (rad/s) -> plain frequency (Hz).
inline constexpr double hz_from_rad(double rad) { return rad / (2.0 * pi); }

/// Optical wavenumber k = 2 pi / lambda (1/m).
inline constexpr double wavenumber(double lambda_m) { return 2.0 * pi / lambda_m; }

}  // namespace cavcool
