#include "becent/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace becent {

FockBasis dimer_basis(int n_particles) {
  if (n_particles < 1)
    throw std::invalid_argument("dimer_basis: particle number must be >= 1");
  std::vector<FockLabel> labels;
  labels.reserve(static_cast<std::size_t>(n_particles) + 1);
  for (int n = 0; n <= n_particles; ++n) labels.push_back({n, n_particles - n});
  return FockBasis(BasisKind::Dimer, n_particles, std::move(labels));
}

FockBasis atom_molecule_basis(int n_atoms_total) {
  if (n_atoms_total < 1)
    throw std::invalid_argument("atom_molecule_basis: total atom number must be >= 1");
  const int parity = n_atoms_total % 2;
  const int m = (n_atoms_total - parity) / 2;
  std::vector<FockLabel> labels;
  labels.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 0; i <= m; ++i) labels.push_back({2 * i + parity, m - i});
  return FockBasis(BasisKind::AtomMolecule, n_atoms_total, std::move(labels));
}

namespace {

// Running product stays within uint64 for n <= 40.
std::uint64_t exact_binomial(int n, int k) {
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

double log_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::invalid_argument("log_binomial: need 0 <= k <= n");
  if (n <= 40) return std::log(static_cast<double>(exact_binomial(n, k)));
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

StateVector::StateVector(FockBasis basis, std::vector<std::complex<double>> amplitudes)
    : basis_(std::move(basis)), amps_(std::move(amplitudes)) {
  if (static_cast<int>(amps_.size()) != basis_.dim())
    throw std::invalid_argument("StateVector: amplitude count does not match basis dimension");
  double peak = 0.0;
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("StateVector: non-finite amplitude");
    peak = std::max({peak, std::abs(a.real()), std::abs(a.imag())});
  }
  if (peak == 0.0)
    throw std::invalid_argument("StateVector: all-zero amplitudes are not normalizable");
  // Scale by the peak first so the squared norm cannot under- or overflow.
  double sq = 0.0;
  for (auto& a : amps_) {
    a /= peak;
    sq += std::norm(a);
  }
  const double inv = 1.0 / std::sqrt(sq);
  for (auto& a : amps_) a *= inv;
}

}  // namespace becent
