#pragma once

#include <complex>
#include <span>
#include <vector>

#include "becent/fock.hpp"

namespace becent {

/// Real symmetric tridiagonal matrix: main diagonal plus subdiagonal.
/// Every Hamiltonian here is tridiagonal in its number basis.
struct SymTriMatrix {
  std::vector<double> diag;
  std::vector<double> sub;  // size dim() - 1

  int dim() const { return static_cast<int>(diag.size()); }
  /// Largest entry magnitude (max norm over stored entries).
  double max_abs() const;
};

/// Dense real square matrix, row-major. Small dimensions only.
struct DenseMatrix {
  int dim = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  explicit DenseMatrix(int d)
      : dim(d), data(static_cast<std::size_t>(d) * static_cast<std::size_t>(d), 0.0) {}
  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * dim + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * dim + c]; }
};

/// Josephson dimer: diag[n] = K/8 (2n-N)^2 - dmu/2 (2n-N),
/// sub[n] = -EJ/2 sqrt((n+1)(N-n)). Requires K >= 0 (repulsive) and EJ >= 0.
SymTriMatrix build_josephson(int n_particles, double interaction, double bias,
                             double tunneling);

/// chi*Jz^2 - omega*Jx for spin j = N/2 in the m = -j..j basis (ascending),
/// constant shifts dropped.
SymTriMatrix build_angular(int n_particles, double chi, double omega);

/// Atom-molecule conversion: diag = delta/2 * n_a,
/// sub[i] = omega/2 sqrt((n_a+1)(n_a+2) n_b) coupling (n_a,n_b) to (n_a+2,n_b-1).
SymTriMatrix build_atom_molecule(int n_atoms_total, double delta, double omega);

/// Jx, Jy and Jz in the dimer Fock basis. Jy is purely imaginary; it is
/// returned as the real matrix Y with Jy = i*Y.
struct AngularMomentumMatrices {
  DenseMatrix jx;
  DenseMatrix jy_imag;
  DenseMatrix jz;
};
AngularMomentumMatrices angular_momentum_matrices(int n_particles);

/// Tridiagonal matrix-vector products. Results are unnormalized.
std::vector<std::complex<double>> apply(const SymTriMatrix& h,
                                        std::span<const std::complex<double>> x);
std::vector<double> apply(const SymTriMatrix& h, std::span<const double> x);
std::vector<std::complex<double>> apply(const SymTriMatrix& h, const StateVector& psi);

/// <psi|H|psi>. Real for symmetric H.
double expectation(const SymTriMatrix& h, const StateVector& psi);

}  // namespace becent
