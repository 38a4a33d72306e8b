#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "cavcool/steady_state.hpp"

// Exact master equation on a truncated Fock space, used as an independent
// oracle for the semiclassical modules. Two-level mode implements the
// standard atom + cavity Lindbladian; three-level mode adds a dark state |b>
// fed by Raman decay at gamma_Rn, with the Rayleigh channel at gamma_Ry.
//
// Steady states come from a direct solve of the vectorized Liouvillian with
// the trace condition replacing one row; dynamics use the exact propagator
// exp(L dt).

namespace cavcool {

using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

struct LiouvillianModel {
  int levels = 2;        // 2 or 3
  int fock_cutoff = 8;   // >= 2; Fock states 0..cutoff
  DriveConfig cfg;
  double gamma_ry = 0.0;  // rad/s, 3-level only
  double gamma_rn = 0.0;  // rad/s, 3-level only
};

struct CutoffError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleSteadyState {
  complexd alpha_q{0.0, 0.0};  // <a>
  double n_photon = 0.0;       // <a^dag a>
  double sigma_ee_q = 0.0;
  double cavity_flux = 0.0;    // 2 kappa <a^dag a>, 1/s
  double top_fock_population = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;
};

struct ShelvingSample {
  double t = 0.0;
  double ground = 0.0;    // population of |a>
  double excited = 0.0;   // population of |e>
  double shelved = 0.0;   // population of |b>
  double n_photon = 0.0;
  double cavity_flux = 0.0;        // instantaneous 2 kappa <a^dag a>
  double cavity_photons = 0.0;     // integral of the flux up to t
};

/// Dense Liouvillian matrix over column-major vectorized density matrices.
MatrixXcd build_liouvillian(const LiouvillianModel& model);

/// Unique steady state of the model. Throws CutoffError if more than 1e-4 of
/// the population sits in the top Fock level.
OracleSteadyState steady_state(const LiouvillianModel& model);

/// Time evolution of a 3-level model from |a, vacuum>, sampled uniformly.
/// Shelved population grows monotonically; cavity_photons integrates the
/// output flux (trapezoid).
std::vector<ShelvingSample> shelving_dynamics(const LiouvillianModel& model, double t_max,
                                              int samples = 200);

/// Propagates an arbitrary initial density matrix for time t (exact
/// exponential); used by tests to check initial-condition independence.
MatrixXcd propagate(const LiouvillianModel& model, const MatrixXcd& rho0, double t,
                    int substeps = 1);

}  // namespace cavcool
