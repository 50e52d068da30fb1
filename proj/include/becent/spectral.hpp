#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "becent/fock.hpp"
#include "becent/operators.hpp"

namespace becent {

/// Raised when an iterative numerical procedure fails to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Full eigensystem of a SymTriMatrix. Eigenvalues ascending; eigenvectors
/// orthonormal, stored column-major with column k paired to eigenvalues[k].
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  std::span<const double> eigenvector(int k) const {
    const auto d = static_cast<std::size_t>(dim());
    return {eigenvectors.data() + static_cast<std::size_t>(k) * d, d};
  }
};

/// Implicit-shift QL with Wilkinson shift; rotations accumulated into the
/// eigenvector matrix. Deterministic. Throws std::invalid_argument on
/// non-finite input and NumericalError if an eigenvalue fails to converge
/// within the per-eigenvalue sweep budget.
EigenDecomposition eigh_tridiagonal(const SymTriMatrix& t);

struct GroundState {
  double energy = 0.0;
  StateVector vector;
  bool degenerate = false;
};

/// Lowest eigenpair of t over the given basis. `degenerate` is set when the
/// first gap is at most gap_tol * (1 + |E0|); the returned vector is still
/// the solver's deterministic choice (sign fixed so the largest-magnitude
/// component is positive).
GroundState ground_state(const FockBasis& basis, const SymTriMatrix& t,
                         double gap_tol = 1e-9);

}  // namespace becent
