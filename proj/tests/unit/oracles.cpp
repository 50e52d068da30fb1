#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace oracle {

std::uint64_t binomial_u64(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("binomial_u64: need 0 <= k <= n");
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

Dense to_dense(const becent::SymTriMatrix& t) {
  Dense d(t.dim());
  for (int i = 0; i < t.dim(); ++i) d.at(i, i) = t.diag[i];
  for (int i = 0; i + 1 < t.dim(); ++i) {
    d.at(i, i + 1) = t.sub[i];
    d.at(i + 1, i) = t.sub[i];
  }
  return d;
}

JacobiResult jacobi_eigensolver(Dense a, int max_sweeps) {
  const int n = a.dim;
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

  double frob = 0.0;
  for (double x : a.a) frob += x * x;
  frob = std::sqrt(frob);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a.at(p, q) * a.at(p, q);
    off = std::sqrt(2.0 * off);
    if (off <= 1e-15 * std::max(frob, 1.0)) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a.at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
        const double sgn = theta >= 0.0 ? 1.0 : -1.0;
        const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with the rotation in the (p, q) plane.
        for (int k = 0; k < n; ++k) {
          const double akp = a.at(k, p);
          const double akq = a.at(k, q);
          a.at(k, p) = c * akp - s * akq;
          a.at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a.at(p, k);
          const double aqk = a.at(q, k);
          a.at(p, k) = c * apk - s * aqk;
          a.at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[static_cast<std::size_t>(p) * n + k];
          const double vkq = v[static_cast<std::size_t>(q) * n + k];
          v[static_cast<std::size_t>(p) * n + k] = c * vkp - s * vkq;
          v[static_cast<std::size_t>(q) * n + k] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int x, int y) { return a.at(x, x) < a.at(y, y); });

  JacobiResult out;
  out.dim = n;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a.at(order[k], order[k]);
    for (int r = 0; r < n; ++r)
      out.vectors[static_cast<std::size_t>(k) * n + r] =
          v[static_cast<std::size_t>(order[k]) * n + r];
  }
  return out;
}

namespace {

// Number of eigenvalues of t strictly below x, from the signs of the
// characteristic-polynomial recurrence p_k, evaluated in ratio form
// q_k = p_k / p_{k-1} = (d_k - x) - e_{k-1}^2 / q_{k-1}.
int count_below(const becent::SymTriMatrix& t, double x) {
  const int n = t.dim();
  int count = 0;
  double q = t.diag[0] - x;
  if (q < 0.0) ++count;
  for (int i = 1; i < n; ++i) {
    if (q == 0.0) q = 1e-300;  // graze: nudge off the exact zero
    q = (t.diag[i] - x) - t.sub[i - 1] * t.sub[i - 1] / q;
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> tridiag_eigenvalues_bisection(const becent::SymTriMatrix& t,
                                                  double tol) {
  const int n = t.dim();
  // Gershgorin bounds.
  double lo = t.diag[0], hi = t.diag[0];
  for (int i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.sub[i - 1]);
    if (i + 1 < n) r += std::abs(t.sub[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  lo -= 1.0;
  hi += 1.0;

  std::vector<double> values(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double a = lo, b = hi;
    while (b - a > tol * std::max(1.0, std::abs(a) + std::abs(b))) {
      const double mid = 0.5 * (a + b);
      if (count_below(t, mid) <= k)
        a = mid;
      else
        b = mid;
    }
    values[k] = 0.5 * (a + b);
  }
  return values;
}

}  // namespace oracle
