#include <doctest.h>

#include <cmath>

#include "cavcool/molecule.hpp"
#include "cavcool/quantum_oracle.hpp"

using namespace cavcool;

namespace {

LiouvillianModel mild_model() {
  LiouvillianModel m;
  m.levels = 2;
  m.fock_cutoff = 6;
  m.cfg.kappa = 1.0;
  m.cfg.gamma_perp = 1.0;
  m.cfg.g = 0.4;
  m.cfg.delta_pa = -8.0;
  m.cfg.delta_pc = -1.0;
  m.cfg.omega_p = 0.6;
  m.cfg.omega_d = 0.3;
  return m;
}

}  // namespace

TEST_CASE("undriven system relaxes to vacuum") {
  LiouvillianModel m = mild_model();
  m.cfg.omega_p = 0.0;
  m.cfg.omega_d = 0.0;
  const OracleSteadyState st = steady_state(m);
  CHECK(std::abs(st.alpha_q) < 1e-12);
  CHECK(st.n_photon < 1e-12);
  CHECK(st.sigma_ee_q < 1e-12);
  CHECK(st.trace_error < 1e-10);
  CHECK(st.min_eigenvalue > -1e-10);
}

TEST_CASE("decoupled driven cavity is exactly the coherent-state amplitude") {
  LiouvillianModel m = mild_model();
  m.cfg.g = 0.0;
  m.cfg.omega_p = 0.0;
  m.cfg.omega_d = 0.8;
  m.fock_cutoff = 10;
  const OracleSteadyState st = steady_state(m);
  const complexd expected = 0.5 * m.cfg.omega_d / complexd(m.cfg.delta_pc, m.cfg.kappa);
  CHECK(std::abs(st.alpha_q - expected) < 1e-8);
  CHECK(st.n_photon == doctest::Approx(std::norm(expected)).epsilon(1e-8));
  CHECK(st.cavity_flux == doctest::Approx(2.0 * m.cfg.kappa * st.n_photon).epsilon(1e-12));
}

TEST_CASE("density matrix posterior checks hold at a coupled point") {
  const OracleSteadyState st = steady_state(mild_model());
  CHECK(st.trace_error < 1e-10);
  CHECK(st.min_eigenvalue > -1e-10);
  CHECK(st.top_fock_population < 1e-4);
}

TEST_CASE("steady state is independent of the initial condition") {
  const LiouvillianModel m = mild_model();
  const int d = m.levels * (m.fock_cutoff + 1);

  MatrixXcd rho_a = MatrixXcd::Zero(d, d);
  rho_a(0, 0) = 1.0;  // ground, vacuum
  MatrixXcd rho_b = MatrixXcd::Zero(d, d);
  rho_b(d - 1, d - 1) = 0.5;  // excited, top Fock
  rho_b(0, 0) = 0.5;

  // ~40 relaxation times of the slowest rate (kappa = gamma_perp = 1)
  const MatrixXcd ra = propagate(m, rho_a, 40.0, 64);
  const MatrixXcd rb = propagate(m, rho_b, 40.0, 64);

  const OracleSteadyState solved = steady_state(m);
  MatrixXcd a_op = MatrixXcd::Zero(d, d);
  for (int n = 1; n <= m.fock_cutoff; ++n) {
    for (int at = 0; at < 2; ++at)
      a_op(at * (m.fock_cutoff + 1) + n - 1, at * (m.fock_cutoff + 1) + n) = std::sqrt(n);
  }
  const complexd alpha_a = (ra * a_op).trace();
  const complexd alpha_b = (rb * a_op).trace();
  CHECK(std::abs(alpha_a - alpha_b) < 1e-8);
  CHECK(std::abs(alpha_a - solved.alpha_q) < 1e-8);
}

TEST_CASE("propagation conserves the trace") {
  const LiouvillianModel m = mild_model();
  const int d = m.levels * (m.fock_cutoff + 1);
  MatrixXcd rho = MatrixXcd::Zero(d, d);
  rho(0, 0) = 0.25;
  rho(d / 2, d / 2) = 0.75;
  const MatrixXcd out = propagate(m, rho, 5.0, 16);
  CHECK(std::abs(out.trace().real() - 1.0) < 1e-10);
  CHECK(std::abs(out.trace().imag()) < 1e-12);
}

TEST_CASE("cutoff violations are reported as errors") {
  LiouvillianModel m = mild_model();
  m.cfg.g = 0.0;
  m.cfg.omega_d = 12.0;  // |alpha| ~ 4 photons >> cutoff 3
  m.fock_cutoff = 3;
  CHECK_THROWS_AS(steady_state(m), CutoffError);
}

TEST_CASE("model validation") {
  LiouvillianModel m = mild_model();
  m.levels = 4;
  CHECK_THROWS_AS(steady_state(m), std::invalid_argument);
  m.levels = 2;
  m.fock_cutoff = 1;
  CHECK_THROWS_AS(steady_state(m), std::invalid_argument);
}

TEST_CASE("shelving dynamics") {
  const double gamma = 1.0;

  SUBCASE("no Raman channel, no shelving") {
    LiouvillianModel m;
    m.levels = 3;
    m.fock_cutoff = 3;
    m.gamma_ry = gamma;
    m.gamma_rn = 0.0;
    m.cfg.kappa = 1.0;
    m.cfg.gamma_perp = 0.5 * gamma;
    m.cfg.g = 0.3;
    m.cfg.delta_pa = -20.0;
    m.cfg.delta_pc = -1.0;
    m.cfg.omega_p = 1.0;
    const auto series = shelving_dynamics(m, 50.0, 100);
    for (const auto& s : series) CHECK(s.shelved < 1e-10);
  }

  SUBCASE("equal branching with no cavity: one Rayleigh scatter per shelving") {
    LiouvillianModel m;
    m.levels = 3;
    m.fock_cutoff = 2;
    m.gamma_ry = 0.5 * gamma;
    m.gamma_rn = 0.5 * gamma;
    m.cfg.kappa = 1.0;
    m.cfg.gamma_perp = 0.5 * gamma;
    m.cfg.g = 0.0;
    m.cfg.delta_pa = -15.0;
    m.cfg.delta_pc = -1.0;
    m.cfg.omega_p = 1.2;

    // evolve until fully shelved; Rayleigh photons = integral gamma_Ry <ee>
    const double sigma_ss = 0.25 * m.cfg.omega_p * m.cfg.omega_p /
                            (m.cfg.delta_pa * m.cfg.delta_pa);
    const double t_end = 14.0 / (m.gamma_rn * sigma_ss);
    const auto series = shelving_dynamics(m, t_end, 1200);
    CHECK(series.back().shelved > 0.999);
    double rayleigh = 0.0;
    for (size_t i = 1; i < series.size(); ++i) {
      const double dt = series[i].t - series[i - 1].t;
      rayleigh += 0.5 * (series[i].excited + series[i - 1].excited) * m.gamma_ry * dt;
    }
    // expected Rayleigh emissions before the Raman event: Upsilon = 1
    CHECK(rayleigh == doctest::Approx(1.0).epsilon(0.03));
  }

  SUBCASE("three-level mode required") {
    LiouvillianModel m = mild_model();
    CHECK_THROWS_AS(shelving_dynamics(m, 1.0), std::invalid_argument);
  }
}
