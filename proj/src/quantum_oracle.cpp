#include "cavcool/quantum_oracle.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

namespace cavcool {

namespace {

constexpr complexd kI{0.0, 1.0};

struct Operators {
  int dim = 0;        // total Hilbert dimension
  int nfock = 0;      // fock_cutoff + 1
  MatrixXcd a;        // annihilation
  MatrixXcd sigma_m;  // |a><e|
  MatrixXcd sigma_b;  // |b><e| (3-level)
  MatrixXcd h;        // Hamiltonian
  MatrixXcd n_op;     // a^dag a
  MatrixXcd ee;       // |e><e|
  MatrixXcd aa;       // |a><a|
  MatrixXcd bb;       // |b><b| (3-level)
};

MatrixXcd kron(const MatrixXcd& x, const MatrixXcd& y) {
  MatrixXcd out(x.rows() * y.rows(), x.cols() * y.cols());
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

Operators build_operators(const LiouvillianModel& model) {
  if (model.levels != 2 && model.levels != 3)
    throw std::invalid_argument("oracle: levels must be 2 or 3");
  if (model.fock_cutoff < 2)
    throw std::invalid_argument("oracle: fock_cutoff must be >= 2");
  validate(model.cfg);

  Operators op;
  op.nfock = model.fock_cutoff + 1;
  const int na = model.levels;
  op.dim = na * op.nfock;

  MatrixXcd a_f = MatrixXcd::Zero(op.nfock, op.nfock);
  for (int n = 1; n < op.nfock; ++n) a_f(n - 1, n) = std::sqrt(static_cast<double>(n));
  MatrixXcd id_f = MatrixXcd::Identity(op.nfock, op.nfock);
  MatrixXcd id_a = MatrixXcd::Identity(na, na);

  // Atom basis: 0 = |a>, 1 = |e>, 2 = |b>.
  MatrixXcd sm = MatrixXcd::Zero(na, na);
  sm(0, 1) = 1.0;
  MatrixXcd ee = MatrixXcd::Zero(na, na);
  ee(1, 1) = 1.0;
  MatrixXcd aa = MatrixXcd::Zero(na, na);
  aa(0, 0) = 1.0;

  op.a = kron(id_a, a_f);
  op.sigma_m = kron(sm, id_f);
  op.n_op = op.a.adjoint() * op.a;
  op.ee = kron(ee, id_f);
  op.aa = kron(aa, id_f);
  if (na == 3) {
    MatrixXcd sb = MatrixXcd::Zero(na, na);
    sb(2, 1) = 1.0;
    op.sigma_b = kron(sb, id_f);
    MatrixXcd bb = MatrixXcd::Zero(na, na);
    bb(2, 2) = 1.0;
    op.bb = kron(bb, id_f);
  }

  const DriveConfig& c = model.cfg;
  op.h = -c.delta_pa * op.ee - c.delta_pc * op.n_op +
         c.g * (op.a.adjoint() * op.sigma_m + op.sigma_m.adjoint() * op.a) +
         0.5 * c.omega_p * (op.sigma_m + op.sigma_m.adjoint()) +
         0.5 * c.omega_d * (op.a + op.a.adjoint());
  return op;
}

void add_dissipator(MatrixXcd& lv, const MatrixXcd& c_op, double rate) {
  if (rate == 0.0) return;
  const int d = static_cast<int>(c_op.rows());
  const MatrixXcd id = MatrixXcd::Identity(d, d);
  const MatrixXcd cdc = c_op.adjoint() * c_op;
  lv += rate * (kron(c_op.conjugate(), c_op) -
                0.5 * (kron(id, cdc) + kron(cdc.transpose(), id)));
}

}  // namespace

MatrixXcd build_liouvillian(const LiouvillianModel& model) {
  const Operators op = build_operators(model);
  const int d = op.dim;
  const MatrixXcd id = MatrixXcd::Identity(d, d);

  // vec(A rho B) = (B^T kron A) vec(rho), column-major.
  MatrixXcd lv = -kI * (kron(id, op.h) - kron(op.h.transpose(), id));
  add_dissipator(lv, op.a, 2.0 * model.cfg.kappa);
  if (model.levels == 2) {
    add_dissipator(lv, op.sigma_m, 2.0 * model.cfg.gamma_perp);
  } else {
    add_dissipator(lv, op.sigma_m, model.gamma_ry);
    add_dissipator(lv, op.sigma_b, model.gamma_rn);
  }
  return lv;
}

OracleSteadyState steady_state(const LiouvillianModel& model) {
  const Operators op = build_operators(model);
  MatrixXcd lv = build_liouvillian(model);
  const int d = op.dim;

  // Replace the last row with the trace functional.
  VectorXcd rhs = VectorXcd::Zero(d * d);
  rhs(d * d - 1) = 1.0;
  for (int col = 0; col < d * d; ++col) lv(d * d - 1, col) = 0.0;
  for (int k = 0; k < d; ++k) lv(d * d - 1, k * d + k) = 1.0;

  const VectorXcd rho_vec = lv.partialPivLu().solve(rhs);
  MatrixXcd rho = Eigen::Map<const MatrixXcd>(rho_vec.data(), d, d);
  rho = 0.5 * (rho + rho.adjoint()).eval();

  OracleSteadyState st;
  st.trace_error = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
  st.min_eigenvalue = es.eigenvalues().minCoeff();

  st.alpha_q = (rho * op.a).trace();
  st.n_photon = (rho * op.n_op).trace().real();
  st.sigma_ee_q = (rho * op.ee).trace().real();
  st.cavity_flux = 2.0 * model.cfg.kappa * st.n_photon;

  // Population of the highest Fock level across atomic states.
  double top = 0.0;
  for (int at = 0; at < model.levels; ++at) {
    const int idx = at * op.nfock + (op.nfock - 1);
    top += rho(idx, idx).real();
  }
  st.top_fock_population = top;
  if (top > 1e-4)
    throw CutoffError("oracle: top Fock level holds " + std::to_string(top) +
                      " population; increase fock_cutoff");
  if (st.n_photon > 0.1 * model.fock_cutoff)
    throw CutoffError("oracle: <n> = " + std::to_string(st.n_photon) +
                      " too close to cutoff " + std::to_string(model.fock_cutoff));
  return st;
}

MatrixXcd propagate(const LiouvillianModel& model, const MatrixXcd& rho0, double t,
                    int substeps) {
  const MatrixXcd lv = build_liouvillian(model);
  const int d = static_cast<int>(rho0.rows());
  const MatrixXcd prop = (lv * (t / substeps)).exp();
  VectorXcd v = Eigen::Map<const VectorXcd>(rho0.data(), d * d);
  for (int k = 0; k < substeps; ++k) v = prop * v;
  return Eigen::Map<const MatrixXcd>(v.data(), d, d);
}

std::vector<ShelvingSample> shelving_dynamics(const LiouvillianModel& model, double t_max,
                                              int samples) {
  if (model.levels != 3)
    throw std::invalid_argument("shelving_dynamics: requires a 3-level model");
  if (t_max <= 0.0 || samples < 2)
    throw std::invalid_argument("shelving_dynamics: need t_max > 0 and samples >= 2");

  const Operators op = build_operators(model);
  const MatrixXcd lv = build_liouvillian(model);
  const int d = op.dim;

  const double dt = t_max / (samples - 1);
  const MatrixXcd prop = (lv * dt).exp();

  MatrixXcd rho = MatrixXcd::Zero(d, d);
  rho(0, 0) = 1.0;  // |a, vacuum>
  VectorXcd v = Eigen::Map<const VectorXcd>(rho.data(), d * d);

  std::vector<ShelvingSample> out;
  out.reserve(samples);
  double integral = 0.0;
  double prev_flux = 0.0;
  for (int i = 0; i < samples; ++i) {
    if (i > 0) v = prop * v;
    const MatrixXcd r = Eigen::Map<const MatrixXcd>(v.data(), d, d);
    ShelvingSample s;
    s.t = i * dt;
    s.ground = (r * op.aa).trace().real();
    s.excited = (r * op.ee).trace().real();
    s.shelved = (r * op.bb).trace().real();
    s.n_photon = (r * op.n_op).trace().real();
    s.cavity_flux = 2.0 * model.cfg.kappa * s.n_photon;
    if (i > 0) integral += 0.5 * (prev_flux + s.cavity_flux) * dt;
    s.cavity_photons = integral;
    prev_flux = s.cavity_flux;

    // Cutoff guard during the transient as well.
    double top = 0.0;
    for (int at = 0; at < model.levels; ++at)
      top += r(at * op.nfock + op.nfock - 1, at * op.nfock + op.nfock - 1).real();
    if (top > 1e-4)
      throw CutoffError("shelving_dynamics: top Fock level population " +
                        std::to_string(top) + "; increase fock_cutoff");
    out.push_back(s);
  }
  return out;
}

}  // namespace cavcool
