#pragma once

#include <map>
#include <string>
#include <vector>

#include "becent/fock.hpp"

namespace becent {

/// <n_a>, the mean atomic occupation of an atom-molecule state.
double mean_atom_number(const StateVector& psi);

/// theta = <a^dag a^dag b + b^dag a a>, the atom-molecule coherence
/// correlator. Real for any state.
double coherence_correlator(const StateVector& psi);

/// One row of a ground-state sweep.
struct SweepRecord {
  std::string system;
  int total = 0;       // N or N_atm
  double ratio = 0.0;  // EJ/K or delta/Omega
  double entropy = 0.0;
  bool degenerate = false;
  std::map<std::string, double> extra;
};

/// Ground-state entanglement of the dimer for each coupling ratio EJ/K,
/// at zero bias. Ratios must be >= 0. Ratios above 1e6 are evaluated with
/// EJ fixed and K = 1/ratio to avoid overflow in the interaction term.
std::vector<SweepRecord> ground_sweep_josephson(int n_particles,
                                                const std::vector<double>& ratios,
                                                double interaction = 1.0);

struct BondingRatioPoint {
  int n_particles = 0;
  double bonding_entropy = 0.0;
  double max_entropy = 0.0;
  double ratio = 0.0;  // bonding_entropy / max_entropy
};

/// Bonding-state entropy over maximal entropy for each particle number.
std::vector<BondingRatioPoint> bonding_ratio_sweep(const std::vector<int>& particle_numbers);

/// Atom-molecule ground-state sweep over delta/Omega. Each record carries
/// extra["mean_atoms_scaled"] = <n_a>/N_atm, extra["theta_scaled"] = theta/N_atm
/// and extra["energy"] = ground energy.
std::vector<SweepRecord> ground_sweep_atom_molecule(int n_atoms_total,
                                                    const std::vector<double>& ratios,
                                                    double omega = 1.0);

/// delta/Omega at which the ground state's atomic fraction <n_a>/N_atm falls
/// fastest: the finite-size marker of the molecular-condensate crossover,
/// located by nested grid refinement on [lo, hi] until the bracketing cell is
/// narrower than tol. Returns NaN when the fraction never decreases on the
/// interval.
double molecular_threshold(int n_atoms_total, double lo, double hi,
                           double tol = 1e-6, double omega = 1.0);

}  // namespace becent
