#pragma once

#include <complex>
#include <stdexcept>

#include "cavcool/constants.hpp"

// Factorized semiclassical steady state of the driven atom-cavity system.
//
// The field amplitude alpha and atomic coherence zeta obey
//   alpha = (Omega'_d/2) / (Delta_pc + i kappa),      Omega'_d = 2 g zeta + Omega_d
//   zeta  = (Omega'_p/2)(Delta_pa - i gamma_perp) /
//           (|Omega'_p|^2/2 + gamma_perp^2 + Delta_pa^2), Omega'_p = 2 g alpha + Omega_p
// and the excited population is
//   sigma_ee = |Omega'_p/2|^2 / (|Omega'_p|^2/2 + gamma_perp^2 + Delta_pa^2).
// Note the effective linewidth in zeta's denominator (|Omega'_p|^2/2) and in
// the saturation parameter (gamma^2/4) follow slightly different conventions;
// both are implemented verbatim.

namespace cavcool {

using complexd = std::complex<double>;

struct DriveConfig {
  double omega_p = 0.0;     // pump Rabi frequency, rad/s
  double omega_d = 0.0;     // cavity drive strength, rad/s
  double delta_pa = 0.0;    // omega_p - omega_a, rad/s
  double delta_pc = 0.0;    // omega_p - omega_c, rad/s
  double g = 0.0;           // coupling at the particle position, rad/s
  double gamma_perp = 0.0;  // dipole decay rate, rad/s
  double kappa = 0.0;       // field decay rate, rad/s

  double delta_ca() const { return delta_pc - delta_pa; }
  double gamma() const { return 2.0 * gamma_perp; }
};

inline void validate(const DriveConfig& cfg) {
  if (cfg.gamma_perp <= 0.0) throw std::invalid_argument("DriveConfig: gamma_perp must be > 0");
  if (cfg.kappa <= 0.0) throw std::invalid_argument("DriveConfig: kappa must be > 0");
}

struct SteadyState {
  complexd alpha{0.0, 0.0};  // cavity field amplitude
  complexd zeta{0.0, 0.0};   // atomic coherence <sigma->
  double sigma_ee = 0.0;     // excited population
  double n_c_bare = 0.0;     // photon number of the empty driven cavity
  double s = 0.0;            // saturation parameter
  bool converged = false;
  bool multivalued = false;  // distinct fixed points found from different seeds
  int iterations = 0;
};

struct ConvergenceError : std::runtime_error {
  double residual;
  explicit ConvergenceError(double r)
      : std::runtime_error("steady state iteration did not converge, residual " +
                           std::to_string(r)),
        residual(r) {}
};

struct SingularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Photon number of the empty driven cavity, n_c = (Omega_d^2/4)/(kappa^2 + Delta_pc^2).
inline double bare_photon_number(const DriveConfig& cfg) {
  return 0.25 * cfg.omega_d * cfg.omega_d /
         (cfg.kappa * cfg.kappa + cfg.delta_pc * cfg.delta_pc);
}

/// Saturation parameter s = (Omega_p^2/2)/(Delta_pa^2 + gamma^2/4).
inline double saturation(const DriveConfig& cfg) {
  const double gamma = cfg.gamma();
  return 0.5 * cfg.omega_p * cfg.omega_p /
         (cfg.delta_pa * cfg.delta_pa + 0.25 * gamma * gamma);
}

/// Free-space scattering rate Gamma_a = (gamma/2) s/(1+s) = gamma sigma_ee.
inline double free_space_scatter_rate(const DriveConfig& cfg) {
  const double s = saturation(cfg);
  return 0.5 * cfg.gamma() * s / (1.0 + s);
}

/// Field amplitude at fixed coherence: alpha = (g zeta + Omega_d/2)/(Delta_pc + i kappa).
inline complexd field_given_coherence(const DriveConfig& cfg, complexd zeta) {
  return (cfg.g * zeta + 0.5 * cfg.omega_d) / complexd(cfg.delta_pc, cfg.kappa);
}

/// Coherence at fixed field, full nonlinear form.
inline complexd coherence_given_field(const DriveConfig& cfg, complexd alpha) {
  const complexd omega_p_eff = 2.0 * cfg.g * alpha + cfg.omega_p;
  const double denom = 0.5 * std::norm(omega_p_eff) +
                       cfg.gamma_perp * cfg.gamma_perp + cfg.delta_pa * cfg.delta_pa;
  return 0.5 * omega_p_eff * complexd(cfg.delta_pa, -cfg.gamma_perp) / denom;
}

/// Excited population for a given effective pump.
inline double excited_population(const DriveConfig& cfg, complexd omega_p_eff) {
  const double num = 0.25 * std::norm(omega_p_eff);
  return num / (0.5 * std::norm(omega_p_eff) + cfg.gamma_perp * cfg.gamma_perp +
                cfg.delta_pa * cfg.delta_pa);
}

/// Damped fixed-point solve of the coupled (alpha, zeta) system. Throws
/// ConvergenceError after max_iterations; sets `multivalued` when a second
/// seed lands on a different fixed point.
SteadyState solve_self_consistent(const DriveConfig& cfg, int max_iterations = 10000,
                                  double tol = 1e-12);

/// Closed-form weak-drive solution:
///   alpha = (g Omega_p/2 + Omega_d (Delta_pa + i gamma_perp)/2) /
///           ((Delta_pa + i gamma_perp)(Delta_pc + i kappa) - g^2)
/// Valid for s <= 1. Throws SingularityError at a dressed-state resonance.
SteadyState closed_form_unsaturated(const DriveConfig& cfg);

}  // namespace cavcool
