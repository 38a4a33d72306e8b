#pragma once

#include <array>
#include <string>

#include "cavcool/multimode.hpp"

// Transit-time kinematics and decelerator-zone presets for the CLI. Zone
// values are illustrative numbers read off an approximate published
// efficiency curve, not measurements.

namespace cavcool {

struct TransitTimes {
  double t_waist_confocal = 0.0;  // s, crossing the full multimode waist (2 w_sa)
  double t_waist_tem00 = 0.0;     // s, crossing the TEM00 waist (2 w0)
  double t_axial = 0.0;           // s, crossing 66% of the cavity length
};

/// Crossing-time convention: diameter (twice the waist) divided by speed.
inline TransitTimes transit_times(double v, const ConfocalReport& cavity, double length_m) {
  if (v <= 0.0) throw std::invalid_argument("transit_times: v must be > 0");
  return {2.0 * cavity.w_sa / v, 2.0 * cavity.w0 / v, 0.66 * length_m / v};
}

enum class Zone { I, II, III, IV };

struct Scenario {
  Zone zone;
  std::string label;
  double density_cm3 = 0.0;  // 1/cm^3
  double velocity = 0.0;     // m/s
  std::string description;
};

inline const std::array<Scenario, 4>& decelerator_zones() {
  static const std::array<Scenario, 4> zones = {{
      {Zone::I, "I", 5e8, 400.0, "post-skimmer packet, pre-deceleration"},
      {Zone::II, "II", 1e8, 150.0, "partially slowed; axial guiding possible"},
      {Zone::III, "III", 3e7, 30.0, "near-stopped; reflection off a static mirror"},
      {Zone::IV, "IV", 1e7, 5.0, "trapped sample at ~10 mK"},
  }};
  return zones;
}

inline const char* zone_preset_warning() {
  return "zone presets are illustrative values from an approximate efficiency curve";
}

}  // namespace cavcool
