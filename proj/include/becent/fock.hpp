#pragma once

#include <complex>
#include <vector>

namespace becent {

enum class BasisKind { Dimer, AtomMolecule };

/// Occupation pair: (mode A, mode B) for the dimer, (atoms, molecules) for
/// the atom-molecule system.
struct FockLabel {
  int first = 0;
  int second = 0;
  friend bool operator==(const FockLabel&, const FockLabel&) = default;
};

/// Ordered basis of two-mode number states within one conserved sector.
/// Immutable after construction.
class FockBasis {
 public:
  BasisKind kind() const { return kind_; }
  /// Conserved total: N for the dimer, N_atm for the atom-molecule system.
  int total() const { return total_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  const std::vector<FockLabel>& labels() const { return labels_; }
  const FockLabel& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

  friend bool operator==(const FockBasis& a, const FockBasis& b) {
    return a.kind_ == b.kind_ && a.total_ == b.total_;
  }

 private:
  friend FockBasis dimer_basis(int);
  friend FockBasis atom_molecule_basis(int);
  FockBasis(BasisKind kind, int total, std::vector<FockLabel> labels)
      : kind_(kind), total_(total), labels_(std::move(labels)) {}

  BasisKind kind_;
  int total_;
  std::vector<FockLabel> labels_;
};

/// Basis |n>|N-n| for N particles in two coupled modes, n ascending.
FockBasis dimer_basis(int n_particles);

/// Basis |n_a>|n_b> with n_a + 2*n_b = N_atm. The atomic occupation keeps the
/// parity of N_atm, so dim = M + 1 with M = floor(N_atm / 2).
FockBasis atom_molecule_basis(int n_atoms_total);

/// ln C(n, k). Exact (up to rounding of the log) for small n, lgamma-based
/// beyond, so it never overflows.
double log_binomial(int n, int k);

/// Complex amplitudes over a FockBasis, normalized on construction.
/// Rejects zero or non-finite input. Immutable.
class StateVector {
 public:
  StateVector(FockBasis basis, std::vector<std::complex<double>> amplitudes);

  const FockBasis& basis() const { return basis_; }
  const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
  int dim() const { return basis_.dim(); }
  std::complex<double> amplitude(int i) const { return amps_[static_cast<std::size_t>(i)]; }

 private:
  FockBasis basis_;
  std::vector<std::complex<double>> amps_;
};

}  // namespace becent
