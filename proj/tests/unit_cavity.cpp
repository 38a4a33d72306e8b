#include <doctest.h>

#include <cmath>
#include <random>

#include "cavcool/cavity.hpp"
#include "cavcool/molecule.hpp"

using namespace cavcool;

namespace {
Transition oh_p11() { return oh_transition("P1(1)"); }
}

TEST_CASE("unit conversions round-trip exactly") {
  CHECK(rad_from_hz(hz_from_rad(12345.678)) == doctest::Approx(12345.678).epsilon(1e-15));
  CHECK(hz_from_rad(rad_from_hz(7.5e5)) == doctest::Approx(7.5e5).epsilon(1e-15));
}

TEST_CASE("transition invariants") {
  const Transition t = oh_p11();
  const double k = 2.0 * pi / t.lambda_ae;
  const double expected = constants::hbar * k * k / (2.0 * t.mass);
  CHECK(std::abs(t.omega_rec - expected) <= 1e-12 * expected);
  CHECK(t.omega_rec == doctest::Approx(rad_from_hz(1.23e5)).epsilon(0.01));
  CHECK(t.gamma_perp() == doctest::Approx(0.5 * t.gamma).epsilon(1e-15));

  CHECK_THROWS_AS(make_transition("bad", -1.0, 1.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_transition("bad", 1e-6, 0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_transition("bad", 1e-6, 1.0, -0.1, 1.0), std::invalid_argument);
}

TEST_CASE("kappa from finesse") {
  CHECK(kappa_from_finesse(0.02, 5000) == doctest::Approx(rad_from_hz(7.5e5)).epsilon(0.10));
  CHECK(kappa_from_finesse(0.10, 5000) == doctest::Approx(rad_from_hz(1.5e5)).epsilon(0.10));

  // kappa -> 0 monotonically as F grows
  double prev = kappa_from_finesse(0.02, 10.0);
  for (double f : {1e2, 1e4, 1e6, 1e8}) {
    const double k = kappa_from_finesse(0.02, f);
    CHECK(k < prev);
    prev = k;
  }
  CHECK(prev < 1e3);

  CHECK_THROWS_AS(kappa_from_finesse(-0.1, 5000), std::invalid_argument);
  CHECK_THROWS_AS(kappa_from_finesse(0.02, 0.5), std::invalid_argument);
}

TEST_CASE("kappa * F * L = pi c / 2 for all inputs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> len(1e-3, 1.0), fin(2.0, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double l = len(rng), f = fin(rng);
    CHECK(kappa_from_finesse(l, f) * f * l ==
          doctest::Approx(pi * constants::c_light / 2.0).epsilon(1e-12));
  }
}

TEST_CASE("quality-factor chain is mutually consistent") {
  const double lambda = 308.256e-9;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> len(1e-3, 0.5), fin(10.0, 1e6);
  for (int i = 0; i < 200; ++i) {
    const double l = len(rng), f = fin(rng);
    const double kappa = kappa_from_finesse(l, f);
    const double q = q_from_kappa(lambda, kappa);
    CHECK(finesse_from_q(lambda, q, l) == doctest::Approx(f).epsilon(1e-12));
  }
}

TEST_CASE("coupling g0 for the confocal cavities") {
  const Transition t = oh_p11();
  const auto c2 = make_cavity(0.02, 0.02, 5000, ModeKind::ConfocalMultimode);
  const auto c10 = make_cavity(0.10, 0.10, 5000, ModeKind::ConfocalMultimode);
  CHECK(coupling_g0(t, c2) == doctest::Approx(rad_from_hz(9.0e4)).epsilon(0.10));
  CHECK(coupling_g0(t, c10) == doctest::Approx(rad_from_hz(1.8e4)).epsilon(0.10));
}

TEST_CASE("g0^2 V_m is geometry-independent (g0 ~ V_m^{-1/2})") {
  const Transition t = oh_p11();
  const double expected =
      3.0 * constants::c_light * t.lambda_ae * t.lambda_ae * t.gamma_perp() / (4.0 * pi);
  for (double r : {0.01, 0.02, 0.05, 0.10}) {
    const auto c = make_cavity(r, r, 5000, ModeKind::ConfocalMultimode);
    const double g0 = coupling_g0(t, c);
    const double vm = mode_volume(tem00_waist(t, c), c.length_L);
    CHECK(g0 * g0 * vm == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("single-mode waist reduces to sqrt(R/k) at L = R") {
  const Transition t = oh_p11();
  const auto sm = make_cavity(0.02, 0.02, 5000, ModeKind::SingleModeTEM00);
  const auto cf = make_cavity(0.02, 0.02, 5000, ModeKind::ConfocalMultimode);
  CHECK(tem00_waist(t, sm) == doctest::Approx(tem00_waist(t, cf)).epsilon(1e-12));
  CHECK_THROWS_AS(tem00_waist(t, make_cavity(0.05, 0.02, 5000)), std::invalid_argument);
}

TEST_CASE("purcell factor matches the quoted single-mode cooperativity") {
  const Transition t = oh_p11();
  const auto c = make_cavity(0.02, 0.02, 5000, ModeKind::SingleModeTEM00);
  CHECK(purcell_factor(t, c) == doctest::Approx(9.4e-2).epsilon(0.05));

  // linear in finesse
  const auto c2 = make_cavity(0.02, 0.02, 10000, ModeKind::SingleModeTEM00);
  CHECK(purcell_factor(t, c2) == doctest::Approx(2.0 * purcell_factor(t, c)).epsilon(1e-9));
}

TEST_CASE("cooperativity via (g0, kappa, gamma_perp) equals the geometry route") {
  const Transition t = oh_p11();
  for (double r : {0.01, 0.02, 0.10}) {
    for (double f : {2000.0, 5000.0, 1e5}) {
      const auto c = make_cavity(r, r, f, ModeKind::ConfocalMultimode);
      const double g0 = coupling_g0(t, c);
      const double kappa = kappa_from_finesse(r, f);
      const double w0 = tem00_waist(t, c);
      CHECK(cooperativity(g0, kappa, t.gamma_perp()) ==
            doctest::Approx(cooperativity_from_geometry(f, t.k(), w0)).epsilon(1e-9));
      CHECK(purcell_cooperativity(g0, kappa, t.gamma_perp()) ==
            doctest::Approx(purcell_cooperativity_from_geometry(f, t.k(), w0)).epsilon(1e-9));
    }
  }
}

TEST_CASE("derived cavity: m0, N0 and 1/C identity") {
  const Transition t = oh_p11();
  const auto geom = make_cavity(0.02, 0.02, 5000, ModeKind::ConfocalMultimode);
  const DerivedCavity d = derive_cavity(t, geom);
  CHECK(d.m0 == doctest::Approx(t.gamma_perp() * t.gamma_perp() / (2.0 * d.g0 * d.g0))
                    .epsilon(1e-12));
  CHECK(d.n0_crit == doctest::Approx(1.0 / d.c_single).epsilon(1e-12));
  CHECK(d.c_purcell == doctest::Approx(2.0 * d.c_single).epsilon(1e-12));
  CHECK(d.q == doctest::Approx(pi * constants::c_light / (t.lambda_ae * d.kappa)).epsilon(1e-12));
}

TEST_CASE("cavity construction validation") {
  CHECK_THROWS_AS(make_cavity(0.02, 0.021, 5000, ModeKind::ConfocalMultimode),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_cavity(0.02, 0.02, 5000, ModeKind::SingleModeTEM00, 1.5),
                  std::invalid_argument);
  CHECK_NOTHROW(make_cavity(0.02, 0.02 * (1.0 + 1e-10), 5000, ModeKind::ConfocalMultimode));
}
