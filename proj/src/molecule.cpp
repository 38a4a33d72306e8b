#include "cavcool/molecule.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "cavcool/constants.hpp"

namespace cavcool {

namespace {

// Electronic cooling lines out of the F''=1, X2Pi_3/2 ground state.
// P1(1) is 92% closed with one repumper on P12(1); its two-repumper set is
// {P12(1), O12(2)}. Q1(1) needs {P12(2), Q12(1), P1(2), Q12(3)}; Q21(1) needs
// {Q2(1), P2(2)}.
const std::array<OHTransitionRecord, 3> kOhTable = {{
    {"P1(1)", 308.256, 0.5, 0, 2.32e5, 1.43, 2, 0.004, false, 1},
    {"Q1(1)", 307.933, 1.5, 1, 2.32e5, 0.28, 4, 0.040, true, 2},
    {"Q21(1)", 307.937, 0.5, 1, 2.32e5, 0.65, 2, 0.010, false, 0},
}};

std::string canonical_row(const OHTransitionRecord& r) {
  std::ostringstream os;
  os << r.line << '|' << r.lambda_ae_nm << '|' << r.j_prime << '|' << r.n_prime << '|'
     << r.gamma_over_2pi << '|' << r.upsilon << '|' << r.repumpers << '|' << r.vib_leak
     << '|' << (r.cycling_hyperfine ? 1 : 0) << '|' << r.microwave_pulses << '\n';
  return os.str();
}

}  // namespace

std::span<const OHTransitionRecord> oh_table() { return kOhTable; }

unsigned long long oh_table_checksum() {
  unsigned long long h = 14695981039346656037ull;  // FNV-1a 64
  for (const auto& row : kOhTable) {
    for (unsigned char ch : canonical_row(row)) {
      h ^= ch;
      h *= 1099511628211ull;
    }
  }
  return h;
}

double oh_mass() {
  return (15.99491461957 + 1.00782503224) * constants::atomic_mass_unit;
}

Transition oh_transition(const std::string& line) {
  for (const auto& row : kOhTable) {
    if (row.line == line) {
      std::string notes = "electronic, " + std::to_string(row.microwave_pulses) +
                          " microwave pulse(s), vibrational leak " +
                          std::to_string(row.vib_leak);
      return make_transition(row.line, row.lambda_ae_nm * 1e-9,
                             rad_from_hz(row.gamma_over_2pi), row.upsilon, oh_mass(),
                             row.repumpers, notes);
    }
  }
  throw std::invalid_argument("unknown OH transition: " + line);
}

std::vector<Transition> vibrational_candidates() {
  std::vector<Transition> v;
  // Fundamental Q(3/2)e at 2.8 um; ~60% closed with one repumper on P(5/2)f,
  // fully closed with five.
  v.push_back(make_transition("OH vib fundamental", 2.8e-6, rad_from_hz(2.7), 1.6,
                              oh_mass(), 5, "2.8 um fundamental"));
  // First overtone at 1.4 um, decay rate half the fundamental's. Upsilon is
  // not separately tabulated; the fundamental's value is carried over.
  v.push_back(make_transition("OH vib overtone", 1.4e-6, rad_from_hz(1.35), 1.6,
                              oh_mass(), 5, "1.4 um overtone; upsilon carried from fundamental"));
  return v;
}

PhotonBudget photon_budget(double upsilon, double c) {
  if (upsilon < 0.0 || c < 0.0)
    throw std::invalid_argument("photon_budget: upsilon and C must be >= 0");
  PhotonBudget b;
  b.upsilon = upsilon;
  b.cooperativity = c;
  b.p_shelve_per_scatter = 1.0 / (1.0 + upsilon);
  b.mean_free_scatters_to_shelve = 1.0 + upsilon;
  b.cavity_to_raman_ratio = (1.0 + upsilon) * c;
  b.p_raman_per_emission = 1.0 / ((1.0 + upsilon) * (c + 1.0));
  b.p_cavity_per_emission = c / (c + 1.0);
  return b;
}

std::pair<double, double> three_level_decay_rates(double gamma, double upsilon) {
  if (gamma <= 0.0) throw std::invalid_argument("three_level_decay_rates: gamma must be > 0");
  if (upsilon < 0.0) throw std::invalid_argument("three_level_decay_rates: upsilon must be >= 0");
  const double gamma_rn = gamma / (1.0 + upsilon);
  const double gamma_ry = gamma - gamma_rn;
  return {gamma_ry, gamma_rn};
}

}  // namespace cavcool
