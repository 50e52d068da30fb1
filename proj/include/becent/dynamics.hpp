#pragma once

#include <string>
#include <vector>

#include "becent/fock.hpp"
#include "becent/operators.hpp"

namespace becent {

/// States sampled along a Schrodinger evolution. `norms` holds the raw
/// propagation norm at each sample time, recorded before the stored state is
/// renormalized; it is the unitarity diagnostic.
struct Trajectory {
  std::vector<double> times;
  std::vector<StateVector> states;
  std::vector<double> norms;
  std::string hamiltonian;  // descriptor recorded in output files
};

/// Exact propagation: decompose h once, apply phase factors e^{-i lambda t}
/// in the eigenbasis. No step-size error. Times must be ascending and finite;
/// psi0 is the state at t = 0.
Trajectory evolve(const SymTriMatrix& h, const StateVector& psi0,
                  const std::vector<double>& times, std::string descriptor = {});

/// Classical fourth-order Runge-Kutta integration of i dpsi/dt = H psi,
/// marching with steps of magnitude at most dt. Cross-check for `evolve`.
Trajectory evolve_rk4(const SymTriMatrix& h, const StateVector& psi0,
                      const std::vector<double>& times, double dt,
                      std::string descriptor = {});

/// The coupling satisfying 2*omega / (chi*N) = 1.
double critical_omega(int n_particles, double chi);

/// t_c = ln(8N) / (chi*N), in units of hbar.
double critical_time(int n_particles, double chi);

/// P(m) for m = -j..j ascending (j = N/2), from a dimer-basis state.
std::vector<double> jz_distribution(const StateVector& psi);

/// One dynamics experiment: trajectory plus per-time entropy and P(m) rows.
struct DynamicsRun {
  int n_particles = 0;
  double chi = 0.0;
  double omega = 0.0;
  double t_critical = 0.0;
  Trajectory trajectory;
  std::vector<double> entropy;
  std::vector<std::vector<double>> jz;
};

/// Evolve the minimal-weight Jx state under chi*Jz^2 - omega*Jx on a uniform
/// grid of `steps` samples over [0, t_max].
DynamicsRun dynamics_run(int n_particles, double chi, double omega,
                         double t_max, int steps);

/// dynamics_run at the critical coupling omega = chi*N/2.
DynamicsRun cat_generation_run(int n_particles, double chi, double t_max, int steps);

}  // namespace becent
