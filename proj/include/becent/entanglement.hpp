#pragma once

#include <span>
#include <vector>

#include "becent/fock.hpp"

namespace becent {

/// Eigenvalues of either mode's reduced density operator. For a
/// number-conserving pure state these are just |c_n|^2 in basis order, and
/// both modes share the same spectrum.
struct ReducedSpectrum {
  std::vector<double> probabilities;
};

ReducedSpectrum reduced_spectrum(const StateVector& psi);

/// -sum p log2 p with 0 log 0 = 0.
double spectrum_entropy(std::span<const double> probabilities);

/// Entropy of entanglement between the two modes, in bits.
double mode_entropy(const StateVector& psi);

/// log2(dim): entropy of the uniform reduced spectrum.
double max_entanglement(int dim);

/// |N/2>|N/2>, the zero-coupling ground state. N must be even.
StateVector localized_state(int n_particles);

/// Normalized expansion of (a_A^dag +/- a_B^dag)^N on the vacuum:
/// c_n = s_n sqrt(C(N,n)) / 2^(N/2), s_n = (-1)^(N-n) for the antibonding
/// variant. The antibonding state is the minimal-weight Jx state.
StateVector bonding_state(int n_particles, bool anti = false);

/// Equal superposition of the two Fock states with occupation difference
/// +/- D; the single state |N/2>|N/2> when D = 0. Requires 0 <= D <= N and
/// D = N (mod 2).
StateVector cat_state(int n_particles, int distance);

/// Uniform-magnitude amplitudes e^{i theta_n} / sqrt(dim) over any basis.
/// Empty `phases` means all zero.
StateVector mes_state(const FockBasis& basis, const std::vector<double>& phases = {});

/// Entropy of the bonding state from the binomial closed form, accumulated
/// in the log domain so it is overflow-free for large N.
double bonding_entropy_closed_form(int n_particles);

}  // namespace becent
