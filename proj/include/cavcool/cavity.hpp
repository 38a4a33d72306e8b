#pragma once

#include <cmath>
#include <stdexcept>

#include "cavcool/constants.hpp"
#include "cavcool/transition.hpp"

// Cavity geometry and the parameter conversions every other module consumes.
//
// Two cooperativity normalizations are in circulation and both are exposed:
//   cooperativity          C   = g0^2 / (2 kappa gamma_perp)
//   purcell_cooperativity  C_P = g0^2 / (kappa gamma_perp) = 2 C
// C is the ratio of cavity to free-space scattering at Delta_pc = -kappa and
// equals 1/N0 (critical atom number). C_P is the Purcell-factor form quoted
// in most experimental discussions; single-mode and aberration-limited
// numbers reported by this library use C_P.

namespace cavcool {

enum class ModeKind { SingleModeTEM00, ConfocalMultimode };

struct CavityGeometry {
  double length_L = 0.0;   // m
  double radius_R = 0.0;   // m, mirror radius of curvature
  double finesse_F = 0.0;
  ModeKind mode_kind = ModeKind::SingleModeTEM00;
  double degradation = 1.0;  // realized fraction of the multimode cooperativity gain, (0,1]
};

inline CavityGeometry make_cavity(double length_m, double radius_m, double finesse,
                                  ModeKind kind = ModeKind::SingleModeTEM00,
                                  double degradation = 1.0) {
  if (length_m <= 0.0) throw std::invalid_argument("cavity: length must be > 0");
  if (radius_m <= 0.0) throw std::invalid_argument("cavity: radius must be > 0");
  if (finesse <= 1.0) throw std::invalid_argument("cavity: finesse must be > 1");
  if (degradation <= 0.0 || degradation > 1.0)
    throw std::invalid_argument("cavity: degradation must be in (0, 1]");
  if (kind == ModeKind::ConfocalMultimode &&
      std::abs(length_m - radius_m) > 1e-9 * radius_m)
    throw std::invalid_argument("cavity: confocal geometry requires L = R");
  return CavityGeometry{length_m, radius_m, finesse, kind, degradation};
}

/// Field decay rate kappa = pi c / (2 L F).
inline double kappa_from_finesse(double length_m, double finesse) {
  if (length_m <= 0.0 || finesse <= 1.0)
    throw std::invalid_argument("kappa_from_finesse: need L > 0 and F > 1");
  return pi * constants::c_light / (2.0 * length_m * finesse);
}

/// Quality factor from kappa = pi c / (lambda Q).
inline double q_from_kappa(double lambda_m, double kappa) {
  return pi * constants::c_light / (lambda_m * kappa);
}

/// Finesse from the quality factor, F = lambda Q / (2 L).
inline double finesse_from_q(double lambda_m, double q, double length_m) {
  return lambda_m * q / (2.0 * length_m);
}

/// TEM00 waist. Confocal: w0 = sqrt(R/k). Generic symmetric two-mirror
/// resonator: w0^2 = (lambda/2pi) sqrt(L (2R - L)), which reduces to R/k at
/// L = R.
inline double tem00_waist(const Transition& t, const CavityGeometry& c) {
  const double k = t.k();
  if (c.mode_kind == ModeKind::ConfocalMultimode) return std::sqrt(c.radius_R / k);
  const double arg = c.length_L * (2.0 * c.radius_R - c.length_L);
  if (arg <= 0.0) throw std::invalid_argument("tem00_waist: unstable geometry, need L < 2R");
  return std::sqrt(t.lambda_ae / (2.0 * pi) * std::sqrt(arg));
}

/// Mode volume V_m = pi w0^2 L / 4.
inline double mode_volume(double waist_m, double length_m) {
  return pi * waist_m * waist_m * length_m / 4.0;
}

/// Maximum single-particle coupling g0 = sqrt(3 c lambda^2 gamma_perp / (4 pi V_m)).
inline double coupling_g0(const Transition& t, const CavityGeometry& c) {
  const double w0 = tem00_waist(t, c);
  const double vm = mode_volume(w0, c.length_L);
  return std::sqrt(3.0 * constants::c_light * t.lambda_ae * t.lambda_ae * t.gamma_perp() /
                   (4.0 * pi * vm));
}

/// C = g0^2 / (2 kappa gamma_perp); the cavity-to-free-space scattering ratio.
inline double cooperativity(double g0, double kappa, double gamma_perp) {
  return g0 * g0 / (2.0 * kappa * gamma_perp);
}

/// C_P = g0^2 / (kappa gamma_perp) = 2 C; Purcell-factor normalization.
inline double purcell_cooperativity(double g0, double kappa, double gamma_perp) {
  return g0 * g0 / (kappa * gamma_perp);
}

/// Geometry route for C: exact algebraic counterpart of
/// g0^2/(2 kappa gamma_perp) given V_m = pi w0^2 L/4 and kappa = pi c/(2LF),
/// namely 12 F / (pi k^2 w0^2).
inline double cooperativity_from_geometry(double finesse, double k, double waist_m) {
  return 12.0 * finesse / (pi * k * k * waist_m * waist_m);
}

inline double purcell_cooperativity_from_geometry(double finesse, double k, double waist_m) {
  return 2.0 * cooperativity_from_geometry(finesse, k, waist_m);
}

/// Purcell factor for a single-mode cavity; equals purcell_cooperativity.
inline double purcell_factor(const Transition& t, const CavityGeometry& c) {
  const double kappa = kappa_from_finesse(c.length_L, c.finesse_F);
  const double g0 = coupling_g0(t, c);
  return purcell_cooperativity(g0, kappa, t.gamma_perp());
}

/// Saturation photon number m0 = gamma_perp^2 / (2 g0^2).
inline double saturation_photon_number(double g0, double gamma_perp) {
  return gamma_perp * gamma_perp / (2.0 * g0 * g0);
}

/// Critical atom number N0 = 2 gamma_perp kappa / g0^2 = 1/C.
inline double critical_atom_number(double g0, double kappa, double gamma_perp) {
  return 2.0 * gamma_perp * kappa / (g0 * g0);
}

/// All derived single-mode quantities for one transition in one cavity.
/// Multimode fields (n_eff, w_sa, C_sa) are filled by the multimode module;
/// here they hold the single-mode values (n_eff = 1, w_sa = w0, c_sa = C_P).
struct DerivedCavity {
  double kappa = 0.0;      // rad/s
  double w0 = 0.0;         // m
  double v_m = 0.0;        // m^3
  double g0 = 0.0;         // rad/s
  double n_eff = 1.0;
  double w_sa = 0.0;       // m
  double c_single = 0.0;   // g0^2/(2 kappa gamma_perp)
  double c_purcell = 0.0;  // g0^2/(kappa gamma_perp)
  double c_sa = 0.0;
  double q = 0.0;
  double m0 = 0.0;
  double n0_crit = 0.0;
};

inline DerivedCavity derive_cavity(const Transition& t, const CavityGeometry& c) {
  DerivedCavity d;
  d.kappa = kappa_from_finesse(c.length_L, c.finesse_F);
  d.w0 = tem00_waist(t, c);
  d.v_m = mode_volume(d.w0, c.length_L);
  d.g0 = coupling_g0(t, c);
  d.n_eff = 1.0;
  d.w_sa = d.w0;
  d.c_single = cooperativity(d.g0, d.kappa, t.gamma_perp());
  d.c_purcell = purcell_cooperativity(d.g0, d.kappa, t.gamma_perp());
  d.c_sa = d.c_purcell;
  d.q = q_from_kappa(t.lambda_ae, d.kappa);
  d.m0 = saturation_photon_number(d.g0, t.gamma_perp());
  d.n0_crit = critical_atom_number(d.g0, d.kappa, t.gamma_perp());
  return d;
}

}  // namespace cavcool
