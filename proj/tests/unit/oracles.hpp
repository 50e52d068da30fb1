// Independent reference implementations used only to check the library.
// Nothing here may call into the code paths under test.

#pragma once

#include <cstdint>
#include <vector>

#include "becent/operators.hpp"

namespace oracle {

/// Exact binomial coefficient in 64-bit integer arithmetic (safe for n <= 62).
std::uint64_t binomial_u64(int n, int k);

/// Dense symmetric matrix, row-major.
struct Dense {
  int dim = 0;
  std::vector<double> a;

  explicit Dense(int d) : dim(d), a(static_cast<std::size_t>(d) * d, 0.0) {}
  double& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  double at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
};

Dense to_dense(const becent::SymTriMatrix& t);

/// Cyclic Jacobi rotations on a dense symmetric matrix. Eigenvalues ascending,
/// eigenvectors column-major (column k pairs with values[k]).
struct JacobiResult {
  int dim = 0;
  std::vector<double> values;
  std::vector<double> vectors;
};
JacobiResult jacobi_eigensolver(Dense a, int max_sweeps = 100);

/// Eigenvalues of a symmetric tridiagonal matrix by bisection on the
/// characteristic-polynomial three-term recurrence (Sturm count).
std::vector<double> tridiag_eigenvalues_bisection(const becent::SymTriMatrix& t,
                                                  double tol = 1e-12);

}  // namespace oracle
