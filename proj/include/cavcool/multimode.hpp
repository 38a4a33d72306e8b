#pragma once

#include <vector>

#include "cavcool/cavity.hpp"
#include "cavcool/transition.hpp"

// Confocal multimode enhancement. A confocal cavity (L = R) supports many
// degenerate transverse modes within one linewidth; treating them as a single
// super-mode multiplies the coupling by n_eff, so the cooperativity gains
// n_eff^2 up to the spherical-aberration limit. Reported cooperativities use
// the Purcell normalization (see cavity.hpp).

namespace cavcool {

struct ConfocalReport {
  double kappa = 0.0;   // rad/s
  double g0 = 0.0;      // rad/s, TEM00 coupling
  double g_eff = 0.0;   // rad/s, sqrt(degradation) * n_eff * g0
  double w0 = 0.0;      // m
  double w_sa = 0.0;    // m, aberration-limited convolved waist
  double c_single = 0.0;    // g0^2/(2 kappa gamma_perp)
  double c_purcell = 0.0;   // g0^2/(kappa gamma_perp)
  double c_sa = 0.0;        // degradation * n_eff^2 * c_purcell
  double n_eff_aberration = 0.0;
  double n_eff_modecount = 0.0;  // 0 unless a mode count was supplied
  double mode_count_m = 0.0;
  double degradation = 1.0;
  double figure_of_merit = 0.0;  // c_sa * pi w0^2, m^2
  double delta_omega_sa_over_delta_omega = 0.0;  // 8 n_eff / 3
  bool aberration_bound_ok = true;  // F < kR
};

/// Aberration-limited cooperativity of a confocal cavity,
/// c_sa = n_eff^2 * C_P = 12 sqrt(2F/(pi k R)). Valid as long as F < kR
/// (aberration_bound_ok in reports; computed regardless).
double c_sa(double finesse, double radius_m, double lambda_m);

/// Effective number of additional modes, n_eff = (pi k R / 2F)^{1/4}.
double n_eff_aberration(double finesse, double radius_m, double lambda_m);

/// Mode-count route: n_eff = (2M'+1)!!/(2M')!! with M = (M'+1)^2 modes.
/// Non-square M inverts to the nearest integer M'. Log-domain evaluation.
double n_eff_modecount(double mode_count_m);

/// Large-M' asymptote sqrt(2(2M'+1)/pi) of the double-factorial ratio.
double n_eff_modecount_asymptotic(double m_prime);

/// Full confocal summary for one transition. mode_count_m > 0 additionally
/// fills the mode-count route. degradation scales c_sa linearly and the
/// effective coupling by sqrt(degradation)*n_eff.
ConfocalReport confocal_report(const Transition& t, double finesse, double radius_m,
                               double degradation = 1.0, double mode_count_m = 0.0);

struct SweepRow {
  double finesse = 0.0;
  double radius_m = 0.0;
  ConfocalReport report;
};

/// Evaluates confocal_report over the finesse x radius grid and sorts by
/// figure of merit descending; ties broken by larger R, then larger F.
std::vector<SweepRow> design_sweep(const Transition& t, const std::vector<double>& f_grid,
                                   const std::vector<double>& r_grid,
                                   double degradation = 1.0);

}  // namespace cavcool
