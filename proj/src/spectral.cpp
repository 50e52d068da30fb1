#include "becent/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace becent {

namespace {

constexpr int kMaxSweepsPerEigenvalue = 50;

void require_finite(const SymTriMatrix& t) {
  for (double v : t.diag)
    if (!std::isfinite(v))
      throw std::invalid_argument("eigh_tridiagonal: non-finite diagonal entry");
  for (double v : t.sub)
    if (!std::isfinite(v))
      throw std::invalid_argument("eigh_tridiagonal: non-finite subdiagonal entry");
}

}  // namespace

EigenDecomposition eigh_tridiagonal(const SymTriMatrix& t) {
  const int n = t.dim();
  if (n < 1) throw std::invalid_argument("eigh_tridiagonal: empty matrix");
  if (static_cast<int>(t.sub.size()) != n - 1)
    throw std::invalid_argument("eigh_tridiagonal: subdiagonal length must be dim - 1");
  require_finite(t);

  std::vector<double> d = t.diag;
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  std::copy(t.sub.begin(), t.sub.end(), e.begin());

  // Column-major accumulator, starts as the identity.
  std::vector<double> z(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i) * n + i] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m = l;
    do {
      // Locate a negligible subdiagonal entry (relative deflation criterion).
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;

      if (iter++ == kMaxSweepsPerEigenvalue)
        throw NumericalError("eigh_tridiagonal: no convergence for eigenvalue index " +
                             std::to_string(l));

      // Wilkinson shift from the 2x2 block at l, then one implicit QL sweep.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      int i = m - 1;
      for (; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {  // underflow recovery: split the problem here
          d[i + 1] -= p;
          e[m] = 0.0;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        double* zi = z.data() + static_cast<std::size_t>(i) * n;
        double* zi1 = z.data() + static_cast<std::size_t>(i + 1) * n;
        for (int k = 0; k < n; ++k) {
          f = zi1[k];
          zi1[k] = s * zi[k] + c * f;
          zi[k] = c * zi[k] - s * f;
        }
      }
      if (r == 0.0 && i >= l) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  // Sort ascending, carrying eigenvector columns along.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&d](int a, int b) { return d[a] < d[b]; });

  EigenDecomposition out;
  out.eigenvalues.resize(static_cast<std::size_t>(n));
  out.eigenvectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = d[order[k]];
    const double* src = z.data() + static_cast<std::size_t>(order[k]) * n;
    double* dst = out.eigenvectors.data() + static_cast<std::size_t>(k) * n;
    std::copy(src, src + n, dst);
  }
  return out;
}

GroundState ground_state(const FockBasis& basis, const SymTriMatrix& t, double gap_tol) {
  if (basis.dim() != t.dim())
    throw std::invalid_argument("ground_state: basis and matrix dimensions differ");
  const EigenDecomposition eig = eigh_tridiagonal(t);
  const double e0 = eig.eigenvalues[0];
  const bool degenerate =
      eig.dim() > 1 && (eig.eigenvalues[1] - e0) <= gap_tol * (1.0 + std::abs(e0));

  const auto v = eig.eigenvector(0);
  int peak = 0;
  for (int i = 1; i < t.dim(); ++i)
    if (std::abs(v[i]) > std::abs(v[peak])) peak = i;
  const double sign = v[peak] < 0.0 ? -1.0 : 1.0;

  std::vector<std::complex<double>> amps(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) amps[i] = sign * v[i];
  return GroundState{e0, StateVector(basis, std::move(amps)), degenerate};
}

}  // namespace becent
