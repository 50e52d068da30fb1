#include "becent/dynamics.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

#include "becent/entanglement.hpp"
#include "becent/spectral.hpp"

namespace becent {

namespace {

using Complex = std::complex<double>;

void validate_times(const std::vector<double>& times) {
  if (times.empty()) throw std::invalid_argument("evolve: no sample times given");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i])) throw std::invalid_argument("evolve: non-finite time");
    if (i > 0 && times[i] < times[i - 1])
      throw std::invalid_argument("evolve: times must be ascending");
  }
}

double raw_norm(const std::vector<Complex>& v) {
  double sq = 0.0;
  for (const auto& a : v) sq += std::norm(a);
  return std::sqrt(sq);
}

std::string default_descriptor(const SymTriMatrix& h) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "tridiagonal dim=%d", h.dim());
  return buf;
}

}  // namespace

Trajectory evolve(const SymTriMatrix& h, const StateVector& psi0,
                  const std::vector<double>& times, std::string descriptor) {
  if (h.dim() != psi0.dim())
    throw std::invalid_argument("evolve: Hamiltonian and state dimensions differ");
  validate_times(times);

  const int d = h.dim();
  const EigenDecomposition eig = eigh_tridiagonal(h);
  const auto& c0 = psi0.amplitudes();

  // Initial amplitudes in the eigenbasis: a_k = sum_n V(n,k) c0_n.
  std::vector<Complex> a(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const auto vk = eig.eigenvector(k);
    Complex acc = 0.0;
    for (int n = 0; n < d; ++n) acc += vk[n] * c0[n];
    a[k] = acc;
  }

  Trajectory out;
  out.hamiltonian = descriptor.empty() ? default_descriptor(h) : std::move(descriptor);
  out.times = times;
  out.states.reserve(times.size());
  out.norms.reserve(times.size());

  std::vector<Complex> phased(static_cast<std::size_t>(d));
  for (double t : times) {
    for (int k = 0; k < d; ++k)
      phased[k] = std::polar(1.0, -eig.eigenvalues[k] * t) * a[k];
    std::vector<Complex> c(static_cast<std::size_t>(d), 0.0);
    for (int k = 0; k < d; ++k) {
      const auto vk = eig.eigenvector(k);
      const Complex pk = phased[k];
      for (int n = 0; n < d; ++n) c[n] += vk[n] * pk;
    }
    out.norms.push_back(raw_norm(c));
    out.states.emplace_back(psi0.basis(), std::move(c));
  }
  return out;
}

namespace {

void rk4_step(const SymTriMatrix& h, std::vector<Complex>& y, double step) {
  const int d = h.dim();
  const Complex mi(0.0, -1.0);
  auto deriv = [&](const std::vector<Complex>& v) {
    auto hv = apply(h, std::span<const Complex>(v));
    for (auto& z : hv) z *= mi;
    return hv;
  };

  const auto k1 = deriv(y);
  std::vector<Complex> tmp(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * step * k1[i];
  const auto k2 = deriv(tmp);
  for (int i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * step * k2[i];
  const auto k3 = deriv(tmp);
  for (int i = 0; i < d; ++i) tmp[i] = y[i] + step * k3[i];
  const auto k4 = deriv(tmp);
  for (int i = 0; i < d; ++i)
    y[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

}  // namespace

Trajectory evolve_rk4(const SymTriMatrix& h, const StateVector& psi0,
                      const std::vector<double>& times, double dt,
                      std::string descriptor) {
  if (h.dim() != psi0.dim())
    throw std::invalid_argument("evolve_rk4: Hamiltonian and state dimensions differ");
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw std::invalid_argument("evolve_rk4: dt must be > 0");
  validate_times(times);

  Trajectory out;
  out.hamiltonian = descriptor.empty() ? default_descriptor(h) : std::move(descriptor);
  out.times = times;
  out.states.reserve(times.size());
  out.norms.reserve(times.size());

  std::vector<Complex> y = psi0.amplitudes();
  double t_cur = 0.0;
  for (double target : times) {
    const double span = target - t_cur;
    if (span != 0.0) {
      const auto steps = static_cast<long>(std::ceil(std::abs(span) / dt));
      const double step = span / static_cast<double>(steps);
      for (long s = 0; s < steps; ++s) rk4_step(h, y, step);
      t_cur = target;
    }
    out.norms.push_back(raw_norm(y));
    out.states.emplace_back(psi0.basis(), y);
  }
  return out;
}

double critical_omega(int n_particles, double chi) {
  if (n_particles < 1)
    throw std::invalid_argument("critical_omega: particle number must be >= 1");
  if (!(chi > 0.0) || !std::isfinite(chi))
    throw std::invalid_argument("critical_omega: chi must be > 0");
  return 0.5 * chi * n_particles;
}

double critical_time(int n_particles, double chi) {
  if (n_particles < 1)
    throw std::invalid_argument("critical_time: particle number must be >= 1");
  if (!(chi > 0.0) || !std::isfinite(chi))
    throw std::invalid_argument("critical_time: chi must be > 0");
  return std::log(8.0 * n_particles) / (chi * n_particles);
}

std::vector<double> jz_distribution(const StateVector& psi) {
  if (psi.basis().kind() != BasisKind::Dimer)
    throw std::invalid_argument("jz_distribution: requires a dimer-basis state");
  // Index n maps to m = n - N/2, so P(m) ascending is |c_n|^2 in basis order.
  std::vector<double> p;
  p.reserve(static_cast<std::size_t>(psi.dim()));
  for (const auto& a : psi.amplitudes()) p.push_back(std::norm(a));
  return p;
}

DynamicsRun dynamics_run(int n_particles, double chi, double omega, double t_max,
                         int steps) {
  if (steps < 2) throw std::invalid_argument("dynamics_run: need at least 2 grid points");
  if (!(t_max > 0.0) || !std::isfinite(t_max))
    throw std::invalid_argument("dynamics_run: t_max must be > 0");

  DynamicsRun run;
  run.n_particles = n_particles;
  run.chi = chi;
  run.omega = omega;
  run.t_critical = critical_time(n_particles, chi);

  const SymTriMatrix h = build_angular(n_particles, chi, omega);
  const StateVector psi0 = bonding_state(n_particles, /*anti=*/true);

  std::vector<double> times(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    times[i] = t_max * static_cast<double>(i) / static_cast<double>(steps - 1);

  char desc[128];
  std::snprintf(desc, sizeof desc, "chi*Jz^2 - omega*Jx, N=%d, chi=%.17g, omega=%.17g",
                n_particles, chi, omega);
  run.trajectory = evolve(h, psi0, times, desc);

  run.entropy.reserve(times.size());
  run.jz.reserve(times.size());
  for (const auto& state : run.trajectory.states) {
    run.entropy.push_back(mode_entropy(state));
    run.jz.push_back(jz_distribution(state));
  }
  return run;
}

DynamicsRun cat_generation_run(int n_particles, double chi, double t_max, int steps) {
  return dynamics_run(n_particles, chi, critical_omega(n_particles, chi), t_max, steps);
}

}  // namespace becent
