#pragma once

#include <Eigen/Core>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "cavcool/constants.hpp"
#include "cavcool/steady_state.hpp"

// Stochastic semiclassical dynamics of N particles coupled to one cavity
// mode under transverse pumping, the self-organization potentials, and the
// superradiance threshold calculators.
//
// Field equation (per-particle sums over positions z_j along the cavity,
// x_j along the pump):
//   alpha_dot = i[Delta_pc - U0 S_shift] alpha - [kappa + Gamma0 S_cos2] alpha
//               - eta_eff S_zx - i Omega_d/2 + xi_alpha
// with S_cos2 = sum cos^2(k z_j), S_zx = sum cos(k z_j) cos(k x_j) and
// S_shift = sum cos(k z_j) by default (DispersiveSum::Cos, verbatim) or
// sum cos^2 (DispersiveSum::Cos2) for comparison.
//
// lock_to_shift models a drive that chirps with the collective dispersive
// shift (an experiment locking the pump-cavity detuning to the dressed
// resonance): the [Delta_pc - U0 S_shift] bracket is replaced by Delta_pc
// alone, now meaning the offset from the instantaneous shifted resonance.
//
// Momentum equations are the gradients of the cavity lattice U0 |alpha|^2,
// the pump-cavity interference term and the pump lattice; see forces().

namespace cavcool {

enum class NoiseModel { Off, RecoilDiffusion };
enum class DispersiveSum { Cos, Cos2 };

struct DispersiveRates {
  double u0 = 0.0;      // rad/s, dispersive shift per particle
  double gamma0 = 0.0;  // rad/s, absorption-induced field loss per particle
  complexd eta_eff{0.0, 0.0};  // rad/s, effective cavity pump
};

/// U0 = g^2 Delta_pa/(Delta_pa^2+gamma_perp^2), Gamma0 = g^2 gamma_perp/(...),
/// eta_eff = g Omega_p / (-i Delta_pa + gamma_perp).
inline DispersiveRates u0_gamma0_eta(double g, double delta_pa, double gamma_perp,
                                     double omega_p) {
  const double d2 = delta_pa * delta_pa + gamma_perp * gamma_perp;
  DispersiveRates r;
  r.u0 = g * g * delta_pa / d2;
  r.gamma0 = g * g * gamma_perp / d2;
  r.eta_eff = g * omega_p / complexd(gamma_perp, -delta_pa);
  return r;
}

struct EnsembleConfig {
  int n_particles = 1;
  double temperature = 0.0;  // K, initial Maxwell-Boltzmann momenta
  double kappa = 0.0;        // rad/s
  double delta_pc = 0.0;     // rad/s
  double delta_pa = 0.0;     // rad/s
  double g = 0.0;            // rad/s (effective coupling; multimode g_eff if used)
  double gamma_perp = 0.0;   // rad/s
  double omega_p = 0.0;      // rad/s
  double omega_d = 0.0;      // rad/s, optional seeding drive
  double k = 0.0;            // 1/m
  double mass = 0.0;         // kg
  double dt = 0.0;           // s; stability guard dt*kappa <= 0.05
  double duration = 0.0;     // s
  std::uint64_t seed = 1;
  NoiseModel noise_model = NoiseModel::RecoilDiffusion;
  DispersiveSum dispersive_sum = DispersiveSum::Cos;
  double field_noise_mult = 1.0;
  double momentum_noise_mult = 1.0;
  bool raman_loss = false;
  double upsilon = 0.0;  // used when raman_loss is on
  double omega_p_ramp_time = 0.0;  // s; linear pump ramp 0 -> omega_p (0 = off)
  double b_target = 0.9;  // expected <cos^2 kz> of the organized state, used
                          // by pump_scan to place the drive point
  bool lock_to_shift = false;  // chirped-drive protocol: delta_pc is read as
                               // the detuning from the instantaneous shifted
                               // resonance (set -kappa for optimal drive)

  DispersiveRates rates() const {
    return u0_gamma0_eta(g, delta_pa, gamma_perp, omega_p);
  }
};

void validate(const EnsembleConfig& cfg);

struct EnsembleState {
  Eigen::ArrayXd z, x;    // m
  Eigen::ArrayXd pz, px;  // kg m/s
  Eigen::ArrayXd survival;  // per-particle non-shelved weight (raman_loss)
  complexd alpha{0.0, 0.0};
  double t = 0.0;
};

struct IntegrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InsufficientDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Positions uniform over [0, 10 lambda), momenta Maxwell-Boltzmann at the
/// configured temperature, alpha = 0. Draw order: z, x, pz, px.
EnsembleState initial_state(const EnsembleConfig& cfg, std::mt19937_64& rng);

/// Deterministic part of alpha_dot (noise is added by the stepper).
complexd field_derivative(const EnsembleState& state, const EnsembleConfig& cfg);

/// Deterministic forces (N/particle) on the cavity- and pump-axis momenta.
void forces(const EnsembleState& state, const EnsembleConfig& cfg, Eigen::ArrayXd& fz,
            Eigen::ArrayXd& fx);

/// One fixed-step Euler-Maruyama step (semi-implicit in the positions:
/// momenta update first, positions move with the new momenta; the explicit
/// position update pumps energy secularly at any usable dt). Throws
/// IntegrationError on divergence.
void step(EnsembleState& state, const EnsembleConfig& cfg, std::mt19937_64& rng);

/// Spatial average <cos(k z)> in [-1, 1].
inline double order_parameter(const EnsembleState& state, double k) {
  return (state.z * k).cos().mean();
}

/// Checkerboard order parameter <cos(k z) cos(k x)> in [-1, 1]. This is the
/// quantity the cavity field couples to; it reduces to <cos kz> on a pump
/// antinode line and its sign labels the two checkerboard classes.
inline double checkerboard_order(const EnsembleState& state, double k) {
  return ((state.z * k).cos() * (state.x * k).cos()).mean();
}

struct TrajectorySample {
  double t = 0.0;
  double order_param = 0.0;    // checkerboard order <cos kz cos kx>
  double cos_kz_mean = 0.0;    // <cos kz>
  double alpha2 = 0.0;         // |alpha|^2
  double mean_ke = 0.0;        // J per particle
  double shelved_fraction = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  EnsembleState final_state;
};

/// Integrates for cfg.duration, sampling every `sample_every` steps.
Trajectory simulate(const EnsembleConfig& cfg, int sample_every = 20);

struct PotentialDepths {
  double u1 = 0.0;  // J, pump-cavity interference term (symmetry breaking)
  double u2 = 0.0;  // J, cavity lattice depth (sign of U0)
  double i0 = 0.0;  // per-particle scattering rate factor, dimensionless
};

/// Depths of V(z) = U2 cos^2(kz) + U1 cos(kz) along a pump antinode line.
///   I0 = |eta|^2 / ([kappa + N Gamma0 B]^2 + [Delta_pc - N U0 B]^2)
///   U2 = hbar I0 U0 N^2 Theta^2,  U1 = 2 hbar I0 N Theta (Delta_pc - N U0 B)
/// with Theta = <cos kz>, B = <cos^2 kz>. When `alpha` is supplied the depths
/// come from that field instead: U2 = hbar U0 |alpha|^2, U1 = -2 hbar
/// Im(eta* alpha), which is exact for any alpha.
PotentialDepths potential_depths(const EnsembleConfig& cfg, double theta, double cos2_mean,
                                 std::optional<complexd> alpha = std::nullopt);

struct ThresholdReport {
  double omega_th_meanfield = 0.0;  // rad/s, sqrt(kT/hbar kappa) kappa|Dpa|/(sqrt(N) g) sqrt(2)
  double omega_th_numerical = 0.0;  // rad/s, N^{1/4} scaling with sqrt(pi)/2
  double n0_x2 = 0.0;               // minimum particle number, x = 2
  double n0_x4 = 0.0;               // x = 4
  double s_at_pump = 0.0;           // saturation at the mean-field threshold
};

/// Threshold pump strengths and minimum particle numbers
/// N0 = [sqrt(kT/hbar kappa) kappa/(2 g sqrt(s_max))]^x for x = 2, 4.
ThresholdReport thresholds(double g, double delta_pa, double gamma_perp, double kappa,
                           double temperature, double n_particles, double s_max);

struct LocalizationResult {
  bool localized = false;
  int parity = 0;  // +1 even, -1 odd
  double mean_order = 0.0;  // time-average over the final 20%
};

/// Classifies a trajectory: localized when |<cos kz>| time-averaged over the
/// final 20% exceeds 0.5 with a stable sign. Requires a span >= 10/kappa.
LocalizationResult detect_localization(std::span<const TrajectorySample> samples,
                                       double kappa);

struct ScanPoint {
  double omega_p = 0.0;
  double p_localize = 0.0;
  double mean_output = 0.0;  // 2 kappa <|alpha|^2> over the final 30%, averaged over seeds
};

/// Localization probability and mean output power versus pump strength;
/// `n_seeds` trajectories per point, merged in seed order. When
/// `track_dressed_state` is set, delta_pc is re-derived per point as
/// b_target * N U0 - kappa (the organized-state lower dressed resonance,
/// -kappa detuned).
std::vector<ScanPoint> pump_scan(const EnsembleConfig& base, std::span<const double> omega_ps,
                                 int n_seeds, int threads = 1,
                                 bool track_dressed_state = true);

/// Drive point addressing the organized-state dressed resonance.
inline double organized_drive_point(const EnsembleConfig& cfg) {
  return cfg.b_target * cfg.n_particles * cfg.rates().u0 - cfg.kappa;
}

/// Interpolated pump strength where p_localize crosses 1/2.
double measured_threshold(std::span<const ScanPoint> scan);

/// Time-averaged output power 2 kappa <|alpha|^2> over the final 30% of a run.
double mean_output_power(std::span<const TrajectorySample> samples, double kappa);

}  // namespace cavcool
