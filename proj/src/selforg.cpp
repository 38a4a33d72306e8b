#include "cavcool/selforg.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace cavcool {

namespace {
constexpr complexd kI{0.0, 1.0};

// Linear pump turn-on; amplitudes proportional to Omega_p scale with this,
// intensities with its square.
double ramp_factor(const EnsembleConfig& cfg, double t) {
  if (cfg.omega_p_ramp_time <= 0.0 || t >= cfg.omega_p_ramp_time) return 1.0;
  return t / cfg.omega_p_ramp_time;
}

double pump_lattice_coeff(const EnsembleConfig& cfg) {
  // U0 (Omega_p/g)^2 written without the g division: Omega_p^2 Delta_pa /
  // (Delta_pa^2 + gamma_perp^2); finite at g = 0.
  const double d2 = cfg.delta_pa * cfg.delta_pa + cfg.gamma_perp * cfg.gamma_perp;
  return cfg.omega_p * cfg.omega_p * cfg.delta_pa / d2;
}
}  // namespace

void validate(const EnsembleConfig& cfg) {
  if (cfg.n_particles < 1) throw std::invalid_argument("EnsembleConfig: N >= 1 required");
  if (cfg.kappa <= 0.0) throw std::invalid_argument("EnsembleConfig: kappa must be > 0");
  if (cfg.gamma_perp <= 0.0)
    throw std::invalid_argument("EnsembleConfig: gamma_perp must be > 0");
  if (cfg.mass <= 0.0) throw std::invalid_argument("EnsembleConfig: mass must be > 0");
  if (cfg.k <= 0.0) throw std::invalid_argument("EnsembleConfig: k must be > 0");
  if (cfg.dt <= 0.0 || cfg.dt * cfg.kappa > 0.05)
    throw std::invalid_argument("EnsembleConfig: need 0 < dt <= 0.05/kappa");
  if (cfg.duration <= 0.0) throw std::invalid_argument("EnsembleConfig: duration must be > 0");
  if (cfg.temperature < 0.0)
    throw std::invalid_argument("EnsembleConfig: temperature must be >= 0");
}

EnsembleState initial_state(const EnsembleConfig& cfg, std::mt19937_64& rng) {
  const int n = cfg.n_particles;
  const double lambda = 2.0 * pi / cfg.k;
  std::uniform_real_distribution<double> upos(0.0, 10.0 * lambda);
  const double sigma_p =
      cfg.temperature > 0.0
          ? std::sqrt(cfg.mass * constants::k_boltzmann * cfg.temperature)
          : 0.0;
  std::normal_distribution<double> gauss(0.0, 1.0);

  EnsembleState st;
  st.z.resize(n);
  st.x.resize(n);
  st.pz.resize(n);
  st.px.resize(n);
  for (int j = 0; j < n; ++j) st.z[j] = upos(rng);
  for (int j = 0; j < n; ++j) st.x[j] = upos(rng);
  for (int j = 0; j < n; ++j) st.pz[j] = sigma_p * gauss(rng);
  for (int j = 0; j < n; ++j) st.px[j] = sigma_p * gauss(rng);
  if (cfg.raman_loss) st.survival = Eigen::ArrayXd::Ones(n);
  st.alpha = complexd(0.0, 0.0);
  st.t = 0.0;
  return st;
}

complexd field_derivative(const EnsembleState& state, const EnsembleConfig& cfg) {
  const DispersiveRates r = cfg.rates();
  const double ramp = ramp_factor(cfg, state.t);
  const Eigen::ArrayXd cz = (cfg.k * state.z).cos();
  const Eigen::ArrayXd cx = (cfg.k * state.x).cos();
  const double s_cos2 = (cz * cz).sum();
  const double s_shift = cfg.dispersive_sum == DispersiveSum::Cos ? cz.sum() : s_cos2;
  const double s_zx = (cz * cx).sum();
  const double detuning =
      cfg.lock_to_shift ? cfg.delta_pc : cfg.delta_pc - r.u0 * s_shift;
  return (kI * detuning - (cfg.kappa + r.gamma0 * s_cos2)) * state.alpha -
         ramp * r.eta_eff * s_zx - kI * 0.5 * cfg.omega_d;
}

void forces(const EnsembleState& state, const EnsembleConfig& cfg, Eigen::ArrayXd& fz,
            Eigen::ArrayXd& fx) {
  const DispersiveRates r = cfg.rates();
  const double ramp = ramp_factor(cfg, state.t);
  const Eigen::ArrayXd cz = (cfg.k * state.z).cos();
  const Eigen::ArrayXd sz = (cfg.k * state.z).sin();
  const Eigen::ArrayXd cx = (cfg.k * state.x).cos();
  const Eigen::ArrayXd sx = (cfg.k * state.x).sin();

  const double alpha2 = std::norm(state.alpha);
  // i(eta* alpha - eta alpha*) = -2 Im(eta* alpha), real interference weight.
  const double w = -2.0 * ramp * std::imag(std::conj(r.eta_eff) * state.alpha);
  const double hbar_k = constants::hbar * cfg.k;

  // sin(2kz) = 2 sin(kz) cos(kz)
  fz = hbar_k * (r.u0 * alpha2 * 2.0 * cz * sz + w * cx * sz);
  fx = hbar_k * (ramp * ramp * pump_lattice_coeff(cfg) * 2.0 * cx * sx + w * cz * sx);
}

void step(EnsembleState& state, const EnsembleConfig& cfg, std::mt19937_64& rng) {
  const DispersiveRates r = cfg.rates();
  const double dt = cfg.dt;

  Eigen::ArrayXd fz, fx;
  forces(state, cfg, fz, fx);
  const complexd dalpha = field_derivative(state, cfg);

  state.pz += dt * fz;
  state.px += dt * fx;
  state.alpha += dt * dalpha;

  if (cfg.noise_model == NoiseModel::RecoilDiffusion) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    // Free-space scattering Gamma_a feeds recoil diffusion 2 D_p = (hbar k)^2 Gamma_a
    // per axis; the field receives vacuum-scale noise of variance kappa dt.
    const double ramp = ramp_factor(cfg, state.t);
    const double gamma_a =
        2.0 * cfg.gamma_perp * 0.25 * ramp * ramp * cfg.omega_p * cfg.omega_p /
        (cfg.delta_pa * cfg.delta_pa);
    const double sig_p = cfg.momentum_noise_mult * constants::hbar * cfg.k *
                         std::sqrt(gamma_a * dt);
    const double sig_f = cfg.field_noise_mult * std::sqrt(0.5 * cfg.kappa * dt);
    for (int j = 0; j < cfg.n_particles; ++j) state.pz[j] += sig_p * gauss(rng);
    for (int j = 0; j < cfg.n_particles; ++j) state.px[j] += sig_p * gauss(rng);
    state.alpha += complexd(sig_f * gauss(rng), sig_f * gauss(rng));
  }

  state.z += dt * state.pz / cfg.mass;
  state.x += dt * state.px / cfg.mass;

  if (cfg.raman_loss && cfg.omega_p != 0.0) {
    // Expected-survival bookkeeping: local excited population from the pump
    // lattice (Rabi Omega_p cos kx), Raman hazard gamma_Rn sigma_ee dt.
    const double ramp = ramp_factor(cfg, state.t);
    const double gamma_rn = 2.0 * cfg.gamma_perp / (1.0 + cfg.upsilon);
    const double d2 = cfg.delta_pa * cfg.delta_pa + cfg.gamma_perp * cfg.gamma_perp;
    const Eigen::ArrayXd cx = (cfg.k * state.x).cos();
    const Eigen::ArrayXd sigma_ee =
        0.25 * ramp * ramp * cfg.omega_p * cfg.omega_p * cx * cx / d2;
    state.survival *= (-gamma_rn * dt * sigma_ee).exp();
  }

  state.t += dt;

  const double n_eta = cfg.n_particles * std::abs(r.eta_eff);
  const double alpha_bound =
      10.0 * (n_eta / cfg.kappa + 0.5 * std::abs(cfg.omega_d) / cfg.kappa + 1.0);
  if (!std::isfinite(state.alpha.real()) || !std::isfinite(state.alpha.imag()) ||
      !state.pz.isFinite().all() || !state.px.isFinite().all())
    throw IntegrationError("selforg: non-finite state at t = " + std::to_string(state.t));
  if (std::abs(state.alpha) > alpha_bound)
    throw IntegrationError("selforg: |alpha| = " + std::to_string(std::abs(state.alpha)) +
                           " exceeded the drive-limited bound at t = " +
                           std::to_string(state.t));
}

Trajectory simulate(const EnsembleConfig& cfg, int sample_every) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  Trajectory traj;
  traj.final_state = initial_state(cfg, rng);
  EnsembleState& st = traj.final_state;

  const long n_steps = std::lround(cfg.duration / cfg.dt);
  const double inv_2m = 1.0 / (2.0 * cfg.mass);
  auto record = [&]() {
    TrajectorySample s;
    s.t = st.t;
    s.order_param = checkerboard_order(st, cfg.k);
    s.cos_kz_mean = order_parameter(st, cfg.k);
    s.alpha2 = std::norm(st.alpha);
    s.mean_ke = ((st.pz.square() + st.px.square()) * inv_2m).mean();
    s.shelved_fraction = cfg.raman_loss ? 1.0 - st.survival.mean() : 0.0;
    traj.samples.push_back(s);
  };

  record();
  for (long i = 1; i <= n_steps; ++i) {
    step(st, cfg, rng);
    if (i % sample_every == 0 || i == n_steps) record();
  }
  return traj;
}

PotentialDepths potential_depths(const EnsembleConfig& cfg, double theta, double cos2_mean,
                                 std::optional<complexd> alpha) {
  const DispersiveRates r = cfg.rates();
  const double n = cfg.n_particles;
  const double loss = cfg.kappa + n * r.gamma0 * cos2_mean;
  const double det =
      cfg.lock_to_shift ? cfg.delta_pc : cfg.delta_pc - n * r.u0 * cos2_mean;
  PotentialDepths p;
  p.i0 = std::norm(r.eta_eff) / (loss * loss + det * det);
  if (alpha) {
    p.u2 = constants::hbar * r.u0 * std::norm(*alpha);
    p.u1 = -2.0 * constants::hbar * std::imag(std::conj(r.eta_eff) * *alpha);
  } else {
    p.u2 = constants::hbar * p.i0 * r.u0 * n * n * theta * theta;
    p.u1 = 2.0 * constants::hbar * p.i0 * n * theta * det;
  }
  return p;
}

ThresholdReport thresholds(double g, double delta_pa, double gamma_perp, double kappa,
                           double temperature, double n_particles, double s_max) {
  if (temperature <= 0.0 || n_particles < 1.0 || s_max <= 0.0 || s_max >= 1.0)
    throw std::invalid_argument("thresholds: need T > 0, N >= 1, 0 < s_max < 1");
  const double thermal = std::sqrt(constants::k_boltzmann * temperature /
                                   (constants::hbar * kappa));
  const double base = thermal * kappa * std::abs(delta_pa) / g;
  ThresholdReport r;
  r.omega_th_meanfield = base / std::sqrt(n_particles) * std::sqrt(2.0);
  r.omega_th_numerical = base / std::pow(n_particles, 0.25) * std::sqrt(pi) / 2.0;
  const double b = thermal * kappa / (2.0 * g * std::sqrt(s_max));
  r.n0_x2 = b * b;
  r.n0_x4 = b * b * b * b;
  const double gamma = 2.0 * gamma_perp;
  r.s_at_pump = 0.5 * r.omega_th_meanfield * r.omega_th_meanfield /
                (delta_pa * delta_pa + 0.25 * gamma * gamma);
  return r;
}

LocalizationResult detect_localization(std::span<const TrajectorySample> samples,
                                       double kappa) {
  if (samples.size() < 2) throw InsufficientDataError("detect_localization: empty trajectory");
  const double span = samples.back().t - samples.front().t;
  if (span < 10.0 / kappa)
    throw InsufficientDataError("detect_localization: trajectory shorter than 10/kappa");

  const size_t begin = samples.size() - std::max<size_t>(1, samples.size() / 5);
  double mean = 0.0;
  for (size_t i = begin; i < samples.size(); ++i) mean += samples[i].order_param;
  mean /= static_cast<double>(samples.size() - begin);

  LocalizationResult res;
  res.mean_order = mean;
  if (std::abs(mean) <= 0.5) return res;
  const int sign = mean > 0.0 ? 1 : -1;
  for (size_t i = begin; i < samples.size(); ++i)
    if (samples[i].order_param * sign <= 0.0) return res;  // sign not stable
  res.localized = true;
  res.parity = sign;
  return res;
}

double mean_output_power(std::span<const TrajectorySample> samples, double kappa) {
  if (samples.empty()) return 0.0;
  const size_t begin = samples.size() - std::max<size_t>(1, (3 * samples.size()) / 10);
  double acc = 0.0;
  for (size_t i = begin; i < samples.size(); ++i) acc += samples[i].alpha2;
  return 2.0 * kappa * acc / static_cast<double>(samples.size() - begin);
}

std::vector<ScanPoint> pump_scan(const EnsembleConfig& base, std::span<const double> omega_ps,
                                 int n_seeds, int threads, bool track_dressed_state) {
  struct Job {
    size_t point;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (size_t p = 0; p < omega_ps.size(); ++p)
    for (int s = 0; s < n_seeds; ++s)
      jobs.push_back({p, base.seed + static_cast<std::uint64_t>(s)});

  std::vector<int> localized(jobs.size(), 0);
  std::vector<double> output(jobs.size(), 0.0);

  auto work = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      EnsembleConfig cfg = base;
      cfg.omega_p = omega_ps[jobs[i].point];
      cfg.seed = jobs[i].seed;
      if (track_dressed_state && !cfg.lock_to_shift)
        cfg.delta_pc = organized_drive_point(cfg);
      const Trajectory traj = simulate(cfg);
      const LocalizationResult loc = detect_localization(traj.samples, cfg.kappa);
      localized[i] = loc.localized ? 1 : 0;
      output[i] = mean_output_power(traj.samples, cfg.kappa);
    }
  };

  threads = std::max(1, threads);
  if (threads == 1 || jobs.size() < 2) {
    work(0, jobs.size());
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (jobs.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const size_t b = t * chunk;
      const size_t e = std::min(jobs.size(), b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<ScanPoint> scan(omega_ps.size());
  for (size_t p = 0; p < omega_ps.size(); ++p) scan[p].omega_p = omega_ps[p];
  for (size_t i = 0; i < jobs.size(); ++i) {
    scan[jobs[i].point].p_localize += localized[i];
    scan[jobs[i].point].mean_output += output[i];
  }
  for (auto& pt : scan) {
    pt.p_localize /= n_seeds;
    pt.mean_output /= n_seeds;
  }
  return scan;
}

double measured_threshold(std::span<const ScanPoint> scan) {
  for (size_t i = 0; i + 1 < scan.size(); ++i) {
    const double p0 = scan[i].p_localize, p1 = scan[i + 1].p_localize;
    if (p0 < 0.5 && p1 >= 0.5) {
      const double f = (0.5 - p0) / (p1 - p0);
      return scan[i].omega_p + f * (scan[i + 1].omega_p - scan[i].omega_p);
    }
  }
  if (!scan.empty() && scan.front().p_localize >= 0.5) return scan.front().omega_p;
  throw std::runtime_error("measured_threshold: no 0.5 crossing in the scan");
}

}  // namespace cavcool
