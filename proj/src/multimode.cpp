#include "cavcool/multimode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cavcool {

double c_sa(double finesse, double radius_m, double lambda_m) {
  const double k = wavenumber(lambda_m);
  return 12.0 * std::sqrt(2.0 * finesse / (pi * k * radius_m));
}

double n_eff_aberration(double finesse, double radius_m, double lambda_m) {
  const double k = wavenumber(lambda_m);
  return std::pow(pi * k * radius_m / (2.0 * finesse), 0.25);
}

double n_eff_modecount(double mode_count_m) {
  if (mode_count_m < 1.0) throw std::invalid_argument("n_eff_modecount: M must be >= 1");
  // M = (M'+1)^2; nearest-integer inversion (floor undershoots the tabulated
  // M = 220 -> n_eff = 4.3 by 3%).
  const long long m_prime = std::max(0ll, std::llround(std::sqrt(mode_count_m)) - 1);
  // (2M'+1)!!/(2M')!! = (2M'+1)! / (4^M' M'!^2), accumulated in log space.
  const double n = static_cast<double>(m_prime);
  const double log_ratio =
      std::lgamma(2.0 * n + 2.0) - 2.0 * n * std::log(2.0) - 2.0 * std::lgamma(n + 1.0);
  return std::exp(log_ratio);
}

double n_eff_modecount_asymptotic(double m_prime) {
  return std::sqrt(2.0 * (2.0 * m_prime + 1.0) / pi);
}

ConfocalReport confocal_report(const Transition& t, double finesse, double radius_m,
                               double degradation, double mode_count_m) {
  const CavityGeometry geom =
      make_cavity(radius_m, radius_m, finesse, ModeKind::ConfocalMultimode, degradation);
  const double k = t.k();

  ConfocalReport r;
  r.kappa = kappa_from_finesse(radius_m, finesse);
  r.w0 = tem00_waist(t, geom);
  r.g0 = coupling_g0(t, geom);
  r.c_single = cooperativity(r.g0, r.kappa, t.gamma_perp());
  r.c_purcell = purcell_cooperativity(r.g0, r.kappa, t.gamma_perp());
  r.n_eff_aberration = n_eff_aberration(finesse, radius_m, t.lambda_ae);
  r.degradation = degradation;
  r.c_sa = degradation * r.n_eff_aberration * r.n_eff_aberration * r.c_purcell;
  r.g_eff = std::sqrt(degradation) * r.n_eff_aberration * r.g0;
  r.w_sa = 2.0 * std::pow(2.0 * pi * radius_m * radius_m * radius_m / (k * finesse), 0.25);
  r.figure_of_merit = r.c_sa * pi * r.w0 * r.w0;
  r.delta_omega_sa_over_delta_omega = 8.0 * r.n_eff_aberration / 3.0;
  r.aberration_bound_ok = finesse < k * radius_m;
  r.mode_count_m = mode_count_m;
  if (mode_count_m >= 1.0) r.n_eff_modecount = n_eff_modecount(mode_count_m);
  return r;
}

std::vector<SweepRow> design_sweep(const Transition& t, const std::vector<double>& f_grid,
                                   const std::vector<double>& r_grid, double degradation) {
  if (f_grid.empty() || r_grid.empty())
    throw std::invalid_argument("design_sweep: grids must be non-empty");
  std::vector<SweepRow> rows;
  rows.reserve(f_grid.size() * r_grid.size());
  for (double f : f_grid)
    for (double r : r_grid)
      rows.push_back({f, r, confocal_report(t, f, r, degradation)});
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.report.figure_of_merit != b.report.figure_of_merit)
      return a.report.figure_of_merit > b.report.figure_of_merit;
    if (a.radius_m != b.radius_m) return a.radius_m > b.radius_m;
    return a.finesse > b.finesse;
  });
  return rows;
}

}  // namespace cavcool
