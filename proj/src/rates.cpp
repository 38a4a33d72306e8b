#include "cavcool/rates.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace cavcool {

double cooling_rate(const DriveConfig& cfg, double v, double k, double mass) {
  const double v_rec = constants::hbar * k / mass;
  if (v < 10.0 * v_rec)
    throw std::invalid_argument("cooling_rate: v below 10 recoil velocities, formula invalid");
  const double rate_c = gamma_c_doppler(cfg, k * v);
  const double kinetic = 0.5 * mass * v * v;
  return constants::hbar * k * v * rate_c / kinetic;
}

double max_force_power(const DriveConfig& cfg, std::array<double, 2> v0, double k) {
  // v0 = (v_x, v_z); the two pump/cavity beam diagonals are (k_x - k_z) and
  // (k_x + k_z), the stronger projection sets the maximum cooling power.
  const double vx = v0[0], vz = v0[1];
  const double proj = std::max(std::abs(k * (vx - vz)), std::abs(k * (vx + vz)));
  const double rate_c = gamma_c_doppler(cfg, k * std::abs(vx));
  return -constants::hbar * rate_c * proj;
}

double damping_ratio(const DriveConfig& cfg, double omega_rec) {
  const complexd zc(-cfg.kappa, cfg.delta_pc);
  const complexd za(-cfg.gamma(), cfg.delta_pa);  // full gamma, as printed
  const complexd d = zc * za + cfg.g * cfg.g;
  const double d2 = std::norm(d);
  const double zc2 = std::norm(zc);
  if (d2 == 0.0) throw SingularityError("damping_ratio: D = 0");
  const complexd num = std::conj(d) * std::conj(d) * (zc * zc - cfg.g * cfg.g);
  return omega_rec / cfg.gamma_perp * num.imag() / (d2 * zc2);
}

DressedState dressed_composition(const DriveConfig& cfg) {
  const double r = cfg.g / cfg.delta_pa;
  if (std::abs(r) >= 1.0)
    throw std::invalid_argument("dressed_composition: requires |g/Delta_pa| < 1");
  DressedState st;
  st.ca2 = r * r;
  st.ce2 = 1.0 - st.ca2;
  st.energy_shift = dispersive_shift_u0(cfg);
  return st;
}

std::pair<double, double> temperature_limits(const DriveConfig& cfg, const Transition& t) {
  const double c = cfg.g * cfg.g / (2.0 * cfg.kappa * cfg.gamma_perp);
  const double t_rec = constants::hbar * t.omega_rec / constants::k_boltzmann;
  if (c == 0.0) return {std::numeric_limits<double>::infinity(), t_rec};
  const double t_f = constants::hbar * cfg.kappa * (1.0 + 1.0 / c) / constants::k_boltzmann;
  return {t_f, t_rec};
}

RateReport rate_report(const DriveConfig& cfg, const Transition& t, double v) {
  RateReport r;
  r.gamma_c = gamma_c(cfg);
  r.gamma_a = gamma_a(cfg);
  r.ratio_c = r.gamma_a > 0.0 ? r.gamma_c / r.gamma_a : 0.0;
  std::tie(r.t_f, r.t_rec) = temperature_limits(cfg, t);
  r.optimal_delta_pc = optimal_delta_pc_magnitude(cfg.kappa, t.k(), v);
  r.capture_range = cfg.kappa;
  return r;
}

std::vector<CoolmapCell> coolmap(const CoolmapSpec& spec, int threads) {
  if (spec.c_points < 1 || spec.delta_pa_points < 1)
    throw std::invalid_argument("coolmap: grid must be non-empty");
  if (spec.delta_pa_min >= 0.0 || spec.delta_pa_max >= 0.0)
    throw std::invalid_argument("coolmap: detuning axis must be red (negative)");

  const int nc = spec.c_points;
  const int nd = spec.delta_pa_points;
  std::vector<CoolmapCell> cells(static_cast<size_t>(nc) * nd);

  auto log_grid = [](double lo, double hi, int n, int i) {
    if (n == 1) return lo;
    return lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  };

  auto work = [&](int row_begin, int row_end) {
    for (int id = row_begin; id < row_end; ++id) {
      const double dpa = -log_grid(-spec.delta_pa_min, -spec.delta_pa_max, nd, id);
      for (int ic = 0; ic < nc; ++ic) {
        const double c = log_grid(spec.c_min, spec.c_max, nc, ic);
        DriveConfig cfg;
        cfg.kappa = spec.kappa;
        cfg.gamma_perp = spec.gamma_perp;
        cfg.delta_pa = dpa;
        cfg.g = std::sqrt(2.0 * spec.kappa * spec.gamma_perp * c);
        cfg.delta_pc = lower_dressed_drive_point(cfg);
        CoolmapCell& cell = cells[static_cast<size_t>(id) * nc + ic];
        cell.delta_pa = dpa;
        cell.cooperativity = c;
        cell.ratio = damping_ratio(cfg, spec.omega_rec);
      }
    }
  };

  threads = std::max(1, threads);
  if (threads == 1) {
    work(0, nd);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (nd + threads - 1) / threads;
    for (int k = 0; k < threads; ++k) {
      const int b = k * chunk;
      const int e = std::min(nd, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }
  return cells;
}

}  // namespace cavcool
