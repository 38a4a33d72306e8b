#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "cavcool/cavity.hpp"
#include "cavcool/molecule.hpp"
#include "cavcool/quantum_oracle.hpp"

using namespace cavcool;

TEST_CASE("embedded table matches the tabulated records") {
  const auto table = oh_table();
  REQUIRE(table.size() == 3);

  CHECK(table[0].line == "P1(1)");
  CHECK(table[0].lambda_ae_nm == 308.256);
  CHECK(table[0].gamma_over_2pi == 2.32e5);
  CHECK(table[0].upsilon == 1.43);
  CHECK(table[0].repumpers == 2);
  CHECK(table[0].vib_leak == 0.004);
  CHECK_FALSE(table[0].cycling_hyperfine);
  CHECK(table[0].microwave_pulses == 1);

  CHECK(table[1].line == "Q1(1)");
  CHECK(table[1].lambda_ae_nm == 307.933);
  CHECK(table[1].upsilon == 0.28);
  CHECK(table[1].repumpers == 4);
  CHECK(table[1].cycling_hyperfine);
  CHECK(table[1].microwave_pulses == 2);

  CHECK(table[2].line == "Q21(1)");
  CHECK(table[2].lambda_ae_nm == 307.937);
  CHECK(table[2].upsilon == 0.65);
  CHECK(table[2].microwave_pulses == 0);

  // load-time integrity pin
  CHECK(oh_table_checksum() == 0x7176c810db7e282full);
}

TEST_CASE("table rows round-trip through JSON bit-exactly") {
  for (const auto& row : oh_table()) {
    nlohmann::json j;
    j["line"] = row.line;
    j["lambda_ae_nm"] = row.lambda_ae_nm;
    j["j_prime"] = row.j_prime;
    j["n_prime"] = row.n_prime;
    j["gamma_over_2pi"] = row.gamma_over_2pi;
    j["upsilon"] = row.upsilon;
    j["repumpers"] = row.repumpers;
    j["vib_leak"] = row.vib_leak;
    j["cycling_hyperfine"] = row.cycling_hyperfine;
    j["microwave_pulses"] = row.microwave_pulses;
    const nlohmann::json back = nlohmann::json::parse(j.dump());
    CHECK(back["lambda_ae_nm"].get<double>() == row.lambda_ae_nm);
    CHECK(back["gamma_over_2pi"].get<double>() == row.gamma_over_2pi);
    CHECK(back["upsilon"].get<double>() == row.upsilon);
    CHECK(back["vib_leak"].get<double>() == row.vib_leak);
    CHECK(back["j_prime"].get<double>() == row.j_prime);
  }
}

TEST_CASE("photon budget") {
  SUBCASE("deep strong coupling removes shelving per emission") {
    const PhotonBudget b = photon_budget(1.0, 1e9);
    CHECK(b.p_raman_per_emission < 1e-9);
    CHECK(b.survival_after_n(1e6) > 0.999);
  }

  SUBCASE("about half the free-space scatters shelve when upsilon is near one") {
    const PhotonBudget b = photon_budget(1.0, 1e-6);
    CHECK(b.p_shelve_per_scatter == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(b.mean_free_scatters_to_shelve == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("cavity-to-Raman ratio for the single-mode UV cavity") {
    const PhotonBudget b = photon_budget(1.43, 0.094);
    CHECK(b.cavity_to_raman_ratio == doctest::Approx(0.22842).epsilon(1e-6));
  }

  SUBCASE("per-emission branching is a normalized geometric model") {
    const PhotonBudget b = photon_budget(0.65, 0.8);
    // weights cavity : Rayleigh : Raman = (1+u)C : u : 1
    const double total = (1.0 + 0.65) * 0.8 + 0.65 + 1.0;
    CHECK(b.p_raman_per_emission == doctest::Approx(1.0 / total).epsilon(1e-12));
    CHECK(b.p_cavity_per_emission == doctest::Approx((1.0 + 0.65) * 0.8 / total).epsilon(1e-12));
    CHECK(b.survival_after_n(1) == doctest::Approx(1.0 - 1.0 / total).epsilon(1e-12));
  }
}

TEST_CASE("three-level decay split") {
  SUBCASE("upsilon = 1 splits evenly") {
    const auto [ry, rn] = three_level_decay_rates(10.0, 1.0);
    CHECK(ry == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(rn == doctest::Approx(5.0).epsilon(1e-15));
  }
  SUBCASE("upsilon = 0 is all Raman") {
    const auto [ry, rn] = three_level_decay_rates(10.0, 0.0);
    CHECK(ry == 0.0);
    CHECK(rn == 10.0);
  }
  SUBCASE("tabulated electronic line") {
    const double gamma = rad_from_hz(2.32e5);
    const auto [ry, rn] = three_level_decay_rates(gamma, 1.43);
    CHECK(ry + rn == doctest::Approx(gamma).epsilon(1e-12));
    CHECK(ry / rn == doctest::Approx(1.43).epsilon(1e-12));
  }
}

TEST_CASE("vibrational candidates") {
  const auto lines = vibrational_candidates();
  REQUIRE(lines.size() == 2);
  CHECK(lines[0].lambda_ae == doctest::Approx(2.8e-6).epsilon(1e-12));
  CHECK(lines[0].gamma == doctest::Approx(rad_from_hz(2.7)).epsilon(1e-12));
  CHECK(lines[0].upsilon == doctest::Approx(1.6).epsilon(1e-12));

  const auto cav = make_cavity(0.01, 0.01, 1e5, ModeKind::SingleModeTEM00);

  SUBCASE("fundamental in the 1 cm high-finesse cavity") {
    const double c = purcell_factor(lines[0], cav);
    CHECK(c == doctest::Approx(34.0).epsilon(0.15));
    CHECK(c * lines[0].gamma == doctest::Approx(rad_from_hz(100.0)).epsilon(0.15));
    CHECK(tem00_waist(lines[0], cav) == doctest::Approx(60e-6).epsilon(0.15));
  }

  SUBCASE("overtone in the same cavity") {
    const double c = purcell_factor(lines[1], cav);
    CHECK(c == doctest::Approx(17.0).epsilon(0.15));
    CHECK(c * lines[1].gamma == doctest::Approx(rad_from_hz(23.0)).epsilon(0.15));
  }
}

TEST_CASE("oracle shelving dynamics validates the geometric budget") {
  // one molecule, C ~ 0.5, s = 0.01; the geometric model predicts the
  // number of cavity photons collected by 50% shelving within 10%.
  const double upsilon = 1.43;
  const double gamma = rad_from_hz(2e5);
  const auto [gamma_ry, gamma_rn] = three_level_decay_rates(gamma, upsilon);

  LiouvillianModel model;
  model.levels = 3;
  model.fock_cutoff = 3;
  model.gamma_ry = gamma_ry;
  model.gamma_rn = gamma_rn;
  model.cfg.gamma_perp = 0.5 * gamma;
  model.cfg.kappa = rad_from_hz(2e5);
  model.cfg.g = std::sqrt(0.5 * 2.0 * model.cfg.kappa * model.cfg.gamma_perp);  // C = 0.5
  model.cfg.delta_pa = -30.0 * gamma;
  model.cfg.delta_pc = -model.cfg.kappa;
  model.cfg.omega_p =
      std::sqrt(2.0 * 0.01 * (model.cfg.delta_pa * model.cfg.delta_pa + 0.25 * gamma * gamma));

  const double c_eff = model.cfg.g * model.cfg.g / (2.0 * model.cfg.kappa * model.cfg.gamma_perp);
  const PhotonBudget budget = photon_budget(upsilon, c_eff);

  // long enough to pass 50% shelving
  const double shelve_rate = gamma_rn * 0.005;
  const auto series = shelving_dynamics(model, 3.0 / shelve_rate, 600);

  // monotone shelving growth
  for (size_t i = 1; i < series.size(); ++i)
    CHECK(series[i].shelved >= series[i - 1].shelved - 1e-12);

  // interpolate cavity photons at shelved = 0.5
  double measured = -1.0;
  for (size_t i = 1; i < series.size(); ++i) {
    if (series[i].shelved >= 0.5) {
      const double f = (0.5 - series[i - 1].shelved) /
                       (series[i].shelved - series[i - 1].shelved);
      measured = series[i - 1].cavity_photons +
                 f * (series[i].cavity_photons - series[i - 1].cavity_photons);
      break;
    }
  }
  REQUIRE(measured > 0.0);
  CHECK(measured == doctest::Approx(budget.cavity_photons_to_half_shelved()).epsilon(0.10));
}
