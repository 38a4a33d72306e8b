#pragma once

#include <stdexcept>
#include <string>

#include "cavcool/constants.hpp"

namespace cavcool {

/// One optical transition of a particle: wavelength, total energy decay
/// rate gamma (= 2 gamma_perp), Rayleigh-to-Raman branching ratio Upsilon,
/// particle mass and the derived recoil frequency hbar k^2 / (2 m).
struct Transition {
  std::string name;
  double lambda_ae = 0.0;   // m
  double gamma = 0.0;       // rad/s, energy decay rate (2 gamma_perp)
  double upsilon = 0.0;     // Rayleigh/Raman ratio, dimensionless
  double mass = 0.0;        // kg
  double omega_rec = 0.0;   // rad/s, hbar k^2 / 2m
  int repumper_count = 0;
  std::string notes;

  double gamma_perp() const { return 0.5 * gamma; }
  double k() const { return wavenumber(lambda_ae); }
};

inline double recoil_frequency(double lambda_m, double mass_kg) {
  const double k = wavenumber(lambda_m);
  return constants::hbar * k * k / (2.0 * mass_kg);
}

/// Builds a validated Transition, deriving omega_rec from lambda and mass.
inline Transition make_transition(std::string name, double lambda_m, double gamma_rad,
                                  double upsilon, double mass_kg, int repumper_count = 0,
                                  std::string notes = {}) {
  if (lambda_m <= 0.0) throw std::invalid_argument("transition: lambda must be > 0");
  if (gamma_rad <= 0.0) throw std::invalid_argument("transition: gamma must be > 0");
  if (mass_kg <= 0.0) throw std::invalid_argument("transition: mass must be > 0");
  if (upsilon < 0.0) throw std::invalid_argument("transition: upsilon must be >= 0");
  Transition t;
  t.name = std::move(name);
  t.lambda_ae = lambda_m;
  t.gamma = gamma_rad;
  t.upsilon = upsilon;
  t.mass = mass_kg;
  t.omega_rec = recoil_frequency(lambda_m, mass_kg);
  t.repumper_count = repumper_count;
  t.notes = std::move(notes);
  return t;
}

}  // namespace cavcool
