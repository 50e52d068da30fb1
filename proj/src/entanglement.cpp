#include "becent/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace becent {

ReducedSpectrum reduced_spectrum(const StateVector& psi) {
  ReducedSpectrum r;
  r.probabilities.reserve(static_cast<std::size_t>(psi.dim()));
  for (const auto& a : psi.amplitudes()) r.probabilities.push_back(std::norm(a));
  return r;
}

double spectrum_entropy(std::span<const double> probabilities) {
  double e = 0.0;
  for (double p : probabilities)
    if (p > 1e-300) e -= p * std::log2(p);
  return e;
}

double mode_entropy(const StateVector& psi) {
  return spectrum_entropy(reduced_spectrum(psi).probabilities);
}

double max_entanglement(int dim) {
  if (dim < 1) throw std::invalid_argument("max_entanglement: dimension must be >= 1");
  return std::log2(static_cast<double>(dim));
}

StateVector localized_state(int n_particles) {
  if (n_particles < 1 || n_particles % 2 != 0)
    throw std::invalid_argument(
        "localized_state: defined only for even N (equal occupation |N/2>|N/2>)");
  FockBasis basis = dimer_basis(n_particles);
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(basis.dim()), 0.0);
  amps[static_cast<std::size_t>(n_particles / 2)] = 1.0;
  return StateVector(std::move(basis), std::move(amps));
}

StateVector bonding_state(int n_particles, bool anti) {
  FockBasis basis = dimer_basis(n_particles);
  const int n = n_particles;
  const double ln2 = std::log(2.0);
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double mag = std::exp(0.5 * (log_binomial(n, k) - n * ln2));
    const double sign = (anti && (n - k) % 2 != 0) ? -1.0 : 1.0;
    amps[k] = sign * mag;
  }
  return StateVector(std::move(basis), std::move(amps));
}

StateVector cat_state(int n_particles, int distance) {
  FockBasis basis = dimer_basis(n_particles);
  const int n = n_particles;
  const int d = distance;
  if (d < 0 || d > n || (n - d) % 2 != 0)
    throw std::invalid_argument(
        "cat_state: need 0 <= D <= N with D = N (mod 2), got N=" + std::to_string(n) +
        ", D=" + std::to_string(d));
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(n) + 1, 0.0);
  if (d == 0) {
    amps[static_cast<std::size_t>(n / 2)] = 1.0;
  } else {
    const double w = 1.0 / std::sqrt(2.0);
    amps[static_cast<std::size_t>((n + d) / 2)] = w;
    amps[static_cast<std::size_t>((n - d) / 2)] = w;
  }
  return StateVector(std::move(basis), std::move(amps));
}

StateVector mes_state(const FockBasis& basis, const std::vector<double>& phases) {
  const int d = basis.dim();
  if (!phases.empty() && static_cast<int>(phases.size()) != d)
    throw std::invalid_argument("mes_state: phase count does not match basis dimension");
  const double mag = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<std::complex<double>> amps(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const double th = phases.empty() ? 0.0 : phases[i];
    amps[i] = std::polar(mag, th);
  }
  return StateVector(basis, std::move(amps));
}

double bonding_entropy_closed_form(int n_particles) {
  if (n_particles < 1)
    throw std::invalid_argument("bonding_entropy_closed_form: N must be >= 1");
  const int n = n_particles;
  const double ln2 = std::log(2.0);
  double e = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double lp = log_binomial(n, k) - n * ln2;  // ln p_k
    e -= std::exp(lp) * (lp / ln2);
  }
  return e;
}

}  // namespace becent
