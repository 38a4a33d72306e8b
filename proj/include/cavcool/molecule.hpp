#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "cavcool/transition.hpp"

// Three-level Raman-loss bookkeeping and the embedded OH transition dataset.
//
// Every free-space emission branches Rayleigh (back to the cooled ground
// state, rate gamma_Ry) or Raman (into a dark state, rate gamma_Rn), with
// Upsilon = gamma_Ry/gamma_Rn fixed by molecular structure. Adding the cavity
// channel gives per-quantum weights (1+Upsilon)C : Upsilon : 1 for
// cavity : Rayleigh : Raman, so scattering into the cavity beats Raman loss
// by the factor (1+Upsilon)C.

namespace cavcool {

/// One row of the electronic cooling-transition comparison table.
struct OHTransitionRecord {
  std::string line;            // P1(1), Q1(1), Q21(1)
  double lambda_ae_nm = 0.0;
  double j_prime = 0.0;
  int n_prime = 0;
  double gamma_over_2pi = 0.0;  // Hz
  double upsilon = 0.0;
  int repumpers = 0;
  double vib_leak = 0.0;        // fraction lost to v'' != 0
  bool cycling_hyperfine = false;
  int microwave_pulses = 0;
};

/// The embedded electronic dataset (three rows).
std::span<const OHTransitionRecord> oh_table();

/// FNV-1a checksum over the canonical text form of the table; unit tests pin it.
unsigned long long oh_table_checksum();

/// Electronic transition by line label ("P1(1)", "Q1(1)", "Q21(1)").
Transition oh_transition(const std::string& line);

/// OH mass in kg (16O + 1H).
double oh_mass();

/// The two embedded vibrational lines: the 2.8 um fundamental
/// (gamma = 2pi*2.7 Hz, Upsilon = 1.6) and the 1.4 um overtone.
std::vector<Transition> vibrational_candidates();

struct PhotonBudget {
  double upsilon = 0.0;
  double cooperativity = 0.0;              // C as supplied by the caller
  double p_shelve_per_scatter = 0.0;       // 1/(1+Upsilon), free-space events only
  double mean_free_scatters_to_shelve = 0.0;  // 1+Upsilon
  double cavity_to_raman_ratio = 0.0;      // (1+Upsilon) C
  double p_raman_per_emission = 0.0;       // 1/((1+Upsilon)(C+1))
  double p_cavity_per_emission = 0.0;      // C/(C+1)

  /// Probability of not being shelved after n emitted quanta (geometric).
  double survival_after_n(double n) const {
    return std::pow(1.0 - p_raman_per_emission, n);
  }
  /// Expected emissions until 50% shelving probability.
  double emissions_to_half_shelved() const {
    return std::log(0.5) / std::log1p(-p_raman_per_emission);
  }
  /// Expected cavity photons collected by 50% shelving.
  double cavity_photons_to_half_shelved() const {
    return emissions_to_half_shelved() * p_cavity_per_emission;
  }
};

/// Branching budget for Rayleigh/Raman ratio upsilon and cooperativity c.
PhotonBudget photon_budget(double upsilon, double c);

/// Splits the total decay rate: gamma_Ry + gamma_Rn = gamma,
/// gamma_Ry/gamma_Rn = Upsilon.
std::pair<double, double> three_level_decay_rates(double gamma, double upsilon);

}  // namespace cavcool
