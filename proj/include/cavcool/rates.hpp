#pragma once

#include <array>
#include <complex>
#include <vector>

#include "cavcool/steady_state.hpp"
#include "cavcool/transition.hpp"

// Scattering and cooling rate calculators in the dispersive weak-driving
// regime, plus the strong-coupling velocity-damping diagnostic map.

namespace cavcool {

struct RateReport {
  double gamma_c = 0.0;            // cavity scattering rate, 1/s
  double gamma_a = 0.0;            // free-space scattering rate, 1/s
  double ratio_c = 0.0;            // gamma_c / gamma_a
  double t_f = 0.0;                // cavity cooling temperature scale, K
  double t_rec = 0.0;              // hbar omega_rec / k_B, K
  double optimal_delta_pc = 0.0;   // rad/s
  double capture_range = 0.0;      // rad/s (~kappa in Doppler units)
};

struct DressedState {
  double ce2 = 0.0;           // |c_e|^2
  double ca2 = 0.0;           // |c_a|^2
  double energy_shift = 0.0;  // per-particle dispersive shift U0, rad/s
};

/// Smallest ratio |Delta_pa| / max(Omega_p, gamma_perp, g); the dispersive
/// weak-driving condition asks for >> 1 (callers warn below 10).
inline double dispersive_margin(const DriveConfig& cfg) {
  const double m = std::max({std::abs(cfg.omega_p), cfg.gamma_perp, std::abs(cfg.g)});
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(cfg.delta_pa) / m;
}

/// Gamma_c = 2 kappa (Omega_p^2 / 4 Delta_pa^2) g^2 / (Delta_pc^2 + kappa^2).
inline double gamma_c(const DriveConfig& cfg) {
  const double pump = 0.25 * cfg.omega_p * cfg.omega_p / (cfg.delta_pa * cfg.delta_pa);
  return 2.0 * cfg.kappa * pump * cfg.g * cfg.g /
         (cfg.delta_pc * cfg.delta_pc + cfg.kappa * cfg.kappa);
}

/// Gamma_a = 2 gamma_perp (Omega_p^2 / 4 Delta_pa^2).
inline double gamma_a(const DriveConfig& cfg) {
  return 2.0 * cfg.gamma_perp * 0.25 * cfg.omega_p * cfg.omega_p /
         (cfg.delta_pa * cfg.delta_pa);
}

/// Doppler-shifted cavity scattering rate: Delta_pc -> |Delta_pc| + kv.
/// Lorentzian in kv with HWHM kappa centered at kv = -|Delta_pc|.
inline double gamma_c_doppler(const DriveConfig& cfg, double kv) {
  const double pump = 0.25 * cfg.omega_p * cfg.omega_p / (cfg.delta_pa * cfg.delta_pa);
  const double det = std::abs(cfg.delta_pc) + kv;
  return 2.0 * cfg.kappa * pump * cfg.g * cfg.g / (det * det + cfg.kappa * cfg.kappa);
}

/// Optimal pump-cavity detuning magnitude for two counter-propagating beams,
/// |Delta_pc| = kappa + k v.
inline double optimal_delta_pc_magnitude(double kappa, double k, double v) {
  return kappa + k * v;
}

/// Energy damping rate Gamma_cool = hbar k v Gamma_c(v) / (m v^2 / 2).
/// Requires v at least 10 recoil velocities (hbar k / m).
double cooling_rate(const DriveConfig& cfg, double v, double k, double mass);

/// Maximum cooling power f_max . v0 = -hbar Gamma_c(v0) |(k_x -/+ k_z) . v0|
/// for a particle moving in the pump/cavity plane; always <= 0 (W).
double max_force_power(const DriveConfig& cfg, std::array<double, 2> v0, double k);

/// Ratio of the velocity damping rate to the free-space scattering rate,
///   (omega_rec/gamma_perp) Im{(D*)^2 (z_c^2 - g^2)} / (|D|^2 |z_c|^2),
/// z_c = -kappa + i Delta_pc, z_a = -gamma + i Delta_pa, D = z_c z_a + g^2.
/// Negative values indicate cooling.
double damping_ratio(const DriveConfig& cfg, double omega_rec);

/// Dispersive dressed-state composition: |c_a|^2 = g^2/Delta_pa^2.
DressedState dressed_composition(const DriveConfig& cfg);

/// Per-particle dispersive shift of the lower dressed state,
/// U0 = g^2 Delta_pa / (Delta_pa^2 + gamma_perp^2).
inline double dispersive_shift_u0(const DriveConfig& cfg) {
  return cfg.g * cfg.g * cfg.delta_pa /
         (cfg.delta_pa * cfg.delta_pa + cfg.gamma_perp * cfg.gamma_perp);
}

/// Drive point addressing the N-particle lower dressed state -kappa below
/// resonance: Delta_pc = N U0 - kappa.
inline double lower_dressed_drive_point(const DriveConfig& cfg, double n_particles = 1.0) {
  return n_particles * dispersive_shift_u0(cfg) - cfg.kappa;
}

/// (T_f, T_rec): T_f = hbar kappa (1 + 1/C)/k_B with C = g^2/(2 kappa gamma_perp);
/// T_rec = hbar omega_rec / k_B. C = 0 reports T_f = +inf.
std::pair<double, double> temperature_limits(const DriveConfig& cfg, const Transition& t);

/// Standard recoil temperature hbar^2 k^2 / (m k_B) = 2 hbar omega_rec / k_B.
inline double recoil_temperature(const Transition& t) {
  return 2.0 * constants::hbar * t.omega_rec / constants::k_boltzmann;
}

RateReport rate_report(const DriveConfig& cfg, const Transition& t, double v = 0.0);

// ---- damping-ratio map (cooperativity x atomic detuning grid) ----

struct CoolmapSpec {
  double kappa = 0.0;       // rad/s
  double gamma_perp = 0.0;  // rad/s
  double omega_rec = 0.0;   // rad/s
  double c_min = 1e-2;      // cooperativity axis, log-spaced
  double c_max = 1e1;
  int c_points = 200;
  double delta_pa_min = 0.0;  // rad/s, most negative
  double delta_pa_max = 0.0;  // rad/s, least negative
  int delta_pa_points = 200;
};

struct CoolmapCell {
  double delta_pa = 0.0;     // rad/s
  double cooperativity = 0.0;
  double ratio = 0.0;
};

/// Evaluates the damping ratio over the grid; for each cell g is set from the
/// cooperativity (g^2 = 2 kappa gamma_perp C) and Delta_pc is placed -kappa
/// below the single-particle lower dressed state. Row-major, detuning outer.
std::vector<CoolmapCell> coolmap(const CoolmapSpec& spec, int threads = 1);

}  // namespace cavcool
