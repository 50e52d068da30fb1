#include "becent/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace becent {

namespace {

void require_finite(double v, const char* where) {
  if (!std::isfinite(v))
    throw std::invalid_argument(std::string(where) + ": non-finite parameter");
}

}  // namespace

double SymTriMatrix::max_abs() const {
  double m = 0.0;
  for (double v : diag) m = std::max(m, std::abs(v));
  for (double v : sub) m = std::max(m, std::abs(v));
  return m;
}

SymTriMatrix build_josephson(int n_particles, double interaction, double bias,
                             double tunneling) {
  if (n_particles < 1)
    throw std::invalid_argument("build_josephson: particle number must be >= 1");
  require_finite(bias, "build_josephson");
  if (!(interaction >= 0.0))
    throw std::invalid_argument("build_josephson: interaction must be >= 0 (repulsive)");
  if (!(tunneling >= 0.0))
    throw std::invalid_argument("build_josephson: tunneling amplitude must be >= 0");
  if (!std::isfinite(interaction) || !std::isfinite(tunneling))
    throw std::invalid_argument("build_josephson: non-finite parameter");

  const int n = n_particles;
  SymTriMatrix t;
  t.diag.resize(static_cast<std::size_t>(n) + 1);
  t.sub.resize(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) {
    const double z = 2.0 * i - n;  // N_A - N_B on |i>|n-i>
    t.diag[i] = interaction / 8.0 * z * z - bias / 2.0 * z;
  }
  for (int i = 0; i < n; ++i)
    t.sub[i] = -0.5 * tunneling * std::sqrt(double(i + 1) * double(n - i));
  return t;
}

SymTriMatrix build_angular(int n_particles, double chi, double omega) {
  if (n_particles < 1)
    throw std::invalid_argument("build_angular: particle number must be >= 1");
  require_finite(chi, "build_angular");
  require_finite(omega, "build_angular");

  const int n = n_particles;
  const double j = 0.5 * n;
  SymTriMatrix t;
  t.diag.resize(static_cast<std::size_t>(n) + 1);
  t.sub.resize(static_cast<std::size_t>(n));
  for (int i = 0; i <= n; ++i) {
    const double m = i - j;
    t.diag[i] = chi * m * m;
  }
  for (int i = 0; i < n; ++i) {
    const double m = i - j;
    t.sub[i] = -0.5 * omega * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
  }
  return t;
}

SymTriMatrix build_atom_molecule(int n_atoms_total, double delta, double omega) {
  const FockBasis basis = atom_molecule_basis(n_atoms_total);  // validates N_atm
  require_finite(delta, "build_atom_molecule");
  require_finite(omega, "build_atom_molecule");

  const int d = basis.dim();
  SymTriMatrix t;
  t.diag.resize(static_cast<std::size_t>(d));
  t.sub.resize(static_cast<std::size_t>(d) - 1);
  for (int i = 0; i < d; ++i) t.diag[i] = 0.5 * delta * basis.label(i).first;
  for (int i = 0; i + 1 < d; ++i) {
    const auto& [na, nb] = basis.label(i);
    t.sub[i] = 0.5 * omega * std::sqrt(double(na + 1) * double(na + 2) * double(nb));
  }
  return t;
}

AngularMomentumMatrices angular_momentum_matrices(int n_particles) {
  if (n_particles < 1)
    throw std::invalid_argument("angular_momentum_matrices: particle number must be >= 1");
  const int n = n_particles;
  const int d = n + 1;
  AngularMomentumMatrices out{DenseMatrix(d), DenseMatrix(d), DenseMatrix(d)};
  for (int i = 0; i < d; ++i) {
    // label (i, n - i): Jz = (N_B - N_A)/2
    out.jz.at(i, i) = 0.5 * ((n - i) - i);
  }
  for (int i = 0; i + 1 < d; ++i) {
    const double elem = 0.5 * std::sqrt(double(i + 1) * double(n - i));
    out.jx.at(i + 1, i) = elem;
    out.jx.at(i, i + 1) = elem;
    out.jy_imag.at(i + 1, i) = elem;  // Jy = i * jy_imag
    out.jy_imag.at(i, i + 1) = -elem;
  }
  return out;
}

namespace {

template <typename T>
std::vector<T> apply_impl(const SymTriMatrix& h, std::span<const T> x) {
  if (static_cast<int>(x.size()) != h.dim())
    throw std::invalid_argument("apply: dimension mismatch");
  const int d = h.dim();
  std::vector<T> y(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    T v = h.diag[i] * x[i];
    if (i > 0) v += h.sub[i - 1] * x[i - 1];
    if (i + 1 < d) v += h.sub[i] * x[i + 1];
    y[i] = v;
  }
  return y;
}

}  // namespace

std::vector<std::complex<double>> apply(const SymTriMatrix& h,
                                        std::span<const std::complex<double>> x) {
  return apply_impl(h, x);
}

std::vector<double> apply(const SymTriMatrix& h, std::span<const double> x) {
  return apply_impl(h, x);
}

std::vector<std::complex<double>> apply(const SymTriMatrix& h, const StateVector& psi) {
  return apply_impl<std::complex<double>>(h, psi.amplitudes());
}

double expectation(const SymTriMatrix& h, const StateVector& psi) {
  const auto hpsi = apply(h, psi);
  double e = 0.0;
  for (int i = 0; i < psi.dim(); ++i)
    e += (std::conj(psi.amplitude(i)) * hpsi[i]).real();
  return e;
}

}  // namespace becent
