#include "becent/observables.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "becent/entanglement.hpp"
#include "becent/operators.hpp"
#include "becent/spectral.hpp"

namespace becent {

namespace {

void require_atom_molecule(const StateVector& psi, const char* where) {
  if (psi.basis().kind() != BasisKind::AtomMolecule)
    throw std::invalid_argument(std::string(where) + ": requires an atom-molecule state");
}

}  // namespace

double mean_atom_number(const StateVector& psi) {
  require_atom_molecule(psi, "mean_atom_number");
  double mean = 0.0;
  for (int i = 0; i < psi.dim(); ++i)
    mean += std::norm(psi.amplitude(i)) * psi.basis().label(i).first;
  return mean;
}

double coherence_correlator(const StateVector& psi) {
  require_atom_molecule(psi, "coherence_correlator");
  double theta = 0.0;
  for (int i = 0; i + 1 < psi.dim(); ++i) {
    const auto& [na, nb] = psi.basis().label(i);
    const double elem = std::sqrt(double(na + 1) * double(na + 2) * double(nb));
    theta += 2.0 * (std::conj(psi.amplitude(i + 1)) * psi.amplitude(i)).real() * elem;
  }
  return theta;
}

std::vector<SweepRecord> ground_sweep_josephson(int n_particles,
                                                const std::vector<double>& ratios,
                                                double interaction) {
  if (!(interaction > 0.0) || !std::isfinite(interaction))
    throw std::invalid_argument("ground_sweep_josephson: interaction must be > 0");
  const FockBasis basis = dimer_basis(n_particles);

  std::vector<SweepRecord> records;
  records.reserve(ratios.size());
  for (double ratio : ratios) {
    if (!(ratio >= 0.0) || !std::isfinite(ratio))
      throw std::invalid_argument("ground_sweep_josephson: ratios must be >= 0");
    // Beyond 1e6 sweep K -> 0 at fixed EJ instead; same eigenvectors, no
    // overflow in the K N^2 term.
    double k = interaction;
    double ej = ratio * interaction;
    if (ratio > 1e6) {
      ej = 1.0;
      k = 1.0 / ratio;
    }
    GroundState gs = [&] {
      try {
        return ground_state(basis, build_josephson(n_particles, k, 0.0, ej));
      } catch (const NumericalError& err) {
        throw NumericalError("ground_sweep_josephson at ratio " + std::to_string(ratio) +
                             ": " + err.what());
      }
    }();
    SweepRecord rec;
    rec.system = "josephson";
    rec.total = n_particles;
    rec.ratio = ratio;
    rec.entropy = mode_entropy(gs.vector);
    rec.degenerate = gs.degenerate;
    records.push_back(std::move(rec));
  }
  return records;
}

std::vector<BondingRatioPoint> bonding_ratio_sweep(const std::vector<int>& particle_numbers) {
  std::vector<BondingRatioPoint> points;
  points.reserve(particle_numbers.size());
  for (int n : particle_numbers) {
    BondingRatioPoint p;
    p.n_particles = n;
    p.bonding_entropy = bonding_entropy_closed_form(n);
    p.max_entropy = max_entanglement(n + 1);
    p.ratio = p.bonding_entropy / p.max_entropy;
    points.push_back(p);
  }
  return points;
}

std::vector<SweepRecord> ground_sweep_atom_molecule(int n_atoms_total,
                                                    const std::vector<double>& ratios,
                                                    double omega) {
  if (omega == 0.0 || !std::isfinite(omega))
    throw std::invalid_argument("ground_sweep_atom_molecule: omega must be nonzero");
  const FockBasis basis = atom_molecule_basis(n_atoms_total);

  std::vector<SweepRecord> records;
  records.reserve(ratios.size());
  for (double ratio : ratios) {
    if (!std::isfinite(ratio))
      throw std::invalid_argument("ground_sweep_atom_molecule: non-finite ratio");
    const double delta = ratio * omega;
    GroundState gs = [&] {
      try {
        return ground_state(basis, build_atom_molecule(n_atoms_total, delta, omega));
      } catch (const NumericalError& err) {
        throw NumericalError("ground_sweep_atom_molecule at ratio " +
                             std::to_string(ratio) + ": " + err.what());
      }
    }();
    SweepRecord rec;
    rec.system = "atom-molecule";
    rec.total = n_atoms_total;
    rec.ratio = ratio;
    rec.entropy = mode_entropy(gs.vector);
    rec.degenerate = gs.degenerate;
    rec.extra["mean_atoms_scaled"] = mean_atom_number(gs.vector) / n_atoms_total;
    rec.extra["theta_scaled"] = coherence_correlator(gs.vector) / n_atoms_total;
    rec.extra["energy"] = gs.energy;
    records.push_back(std::move(rec));
  }
  return records;
}

double molecular_threshold(int n_atoms_total, double lo, double hi, double tol,
                           double omega) {
  if (!(lo < hi)) throw std::invalid_argument("molecular_threshold: need lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("molecular_threshold: tol must be > 0");
  const FockBasis basis = atom_molecule_basis(n_atoms_total);

  auto atomic_fraction = [&](double ratio) {
    const GroundState gs =
        ground_state(basis, build_atom_molecule(n_atoms_total, ratio * omega, omega));
    return mean_atom_number(gs.vector) / n_atoms_total;
  };

  constexpr int kPoints = 61;
  double a = lo;
  double b = hi;
  double center = 0.5 * (lo + hi);
  for (int level = 0; level < 40; ++level) {
    const double step = (b - a) / (kPoints - 1);
    std::vector<double> frac(kPoints);
    for (int i = 0; i < kPoints; ++i) frac[i] = atomic_fraction(a + step * i);
    int steepest = 0;
    for (int i = 1; i + 1 < kPoints; ++i)
      if (frac[i + 1] - frac[i] < frac[steepest + 1] - frac[steepest]) steepest = i;
    if (frac[steepest + 1] - frac[steepest] >= 0.0)
      return std::numeric_limits<double>::quiet_NaN();
    center = a + (steepest + 0.5) * step;
    if (step <= tol) break;
    a = std::max(lo, center - 2.0 * step);
    b = std::min(hi, center + 2.0 * step);
  }
  return center;
}

}  // namespace becent
