// becent: command-line front end. Sweeps and dynamics runs are written as CSV
// with '#'-prefixed provenance headers; reruns with identical flags produce
// byte-identical files. Exit codes: 0 success, 2 usage error, 3 numerical
// failure.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "becent/dynamics.hpp"
#include "becent/entanglement.hpp"
#include "becent/observables.hpp"
#include "becent/spectral.hpp"
#include "becent/version.hpp"

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_invocation(int argc, char** argv) {
  std::string line = "becent ";
  line += becent::kVersion;
  for (int i = 1; i < argc; ++i) {
    line += ' ';
    line += argv[i];
  }
  return line;
}

// Write-then-rename so readers never observe a partial file.
void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot open output path: " + path);
    out << content;
    if (!out) throw std::invalid_argument("failed writing output path: " + path);
  }
  fs::rename(tmp, target);
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> xs(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
  return xs;
}

struct SweepGrid {
  double min = 0.0;
  double max = 0.0;
  int steps = 0;

  void validate() const {
    if (steps < 2) throw std::invalid_argument("--steps must be >= 2");
    if (!(min < max)) throw std::invalid_argument("--ratio/time bounds must satisfy min < max");
  }
};

int cmd_ground_sweep(const std::string& invocation, int n, const SweepGrid& grid,
                     const std::string& out) {
  grid.validate();
  if (!(grid.min >= 0.0)) throw std::invalid_argument("--ratio-min must be >= 0");

  const auto records =
      becent::ground_sweep_josephson(n, linspace(grid.min, grid.max, grid.steps));

  std::ostringstream csv;
  csv << "# " << invocation << "\n";
  csv << "# version=" << becent::kVersion << "\n";
  csv << "# system=josephson\n";
  csv << "# n=" << n << "\n";
  csv << "# interaction=1\n";
  csv << "# bias=0\n";
  csv << "# ratio_min=" << fmt(grid.min) << "\n";
  csv << "# ratio_max=" << fmt(grid.max) << "\n";
  csv << "# steps=" << grid.steps << "\n";
  csv << "ratio,entropy,degenerate\n";
  for (const auto& rec : records)
    csv << fmt(rec.ratio) << ',' << fmt(rec.entropy) << ',' << (rec.degenerate ? 1 : 0)
        << "\n";
  write_atomic(out, csv.str());
  return 0;
}

std::string jz_column_name(int index, int n) {
  const double m = index - 0.5 * n;
  char buf[32];
  if (n % 2 == 0)
    std::snprintf(buf, sizeof buf, "P(%d)", static_cast<int>(m));
  else
    std::snprintf(buf, sizeof buf, "P(%.1f)", m);
  return buf;
}

int cmd_dynamics(const std::string& invocation, int n, double chi,
                 const std::string& omega_spec, std::optional<double> t_max_opt,
                 int steps, const std::string& out) {
  double omega;
  if (omega_spec == "critical") {
    omega = becent::critical_omega(n, chi);
  } else {
    try {
      std::size_t used = 0;
      omega = std::stod(omega_spec, &used);
      if (used != omega_spec.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("--omega must be a number or \"critical\"");
    }
  }

  const double t_c = becent::critical_time(n, chi);
  const double t_max = t_max_opt.value_or(2.4 * t_c);
  if (steps < 2) throw std::invalid_argument("--steps must be >= 2");
  if (!(t_max > 0.0)) throw std::invalid_argument("--t-max must be > 0");

  const auto run = becent::dynamics_run(n, chi, omega, t_max, steps);

  int tc_row = 0;
  for (std::size_t i = 1; i < run.trajectory.times.size(); ++i)
    if (std::abs(run.trajectory.times[i] - t_c) <
        std::abs(run.trajectory.times[tc_row] - t_c))
      tc_row = static_cast<int>(i);

  std::ostringstream csv;
  csv << "# " << invocation << "\n";
  csv << "# version=" << becent::kVersion << "\n";
  csv << "# hamiltonian=" << run.trajectory.hamiltonian << "\n";
  csv << "# initial_state=minimal-jx-weight\n";
  csv << "# n=" << n << "\n";
  csv << "# chi=" << fmt(chi) << "\n";
  csv << "# omega=" << fmt(omega) << "\n";
  csv << "# t_c=" << fmt(t_c) << "\n";
  csv << "# t_c_row=" << tc_row << "\n";
  csv << "# t_c_row_time=" << fmt(run.trajectory.times[tc_row]) << "\n";
  csv << "# t_max=" << fmt(t_max) << "\n";
  csv << "# steps=" << steps << "\n";
  csv << "t,entropy";
  for (int i = 0; i <= n; ++i) csv << ',' << jz_column_name(i, n);
  csv << "\n";
  for (std::size_t row = 0; row < run.trajectory.times.size(); ++row) {
    csv << fmt(run.trajectory.times[row]) << ',' << fmt(run.entropy[row]);
    for (double p : run.jz[row]) csv << ',' << fmt(p);
    csv << "\n";
  }
  write_atomic(out, csv.str());
  return 0;
}

int cmd_atom_molecule(const std::string& invocation, int n_atm, const SweepGrid& grid,
                      const std::string& out) {
  grid.validate();
  const auto records =
      becent::ground_sweep_atom_molecule(n_atm, linspace(grid.min, grid.max, grid.steps));
  const double threshold = becent::molecular_threshold(n_atm, grid.min, grid.max);

  std::ostringstream csv;
  csv << "# " << invocation << "\n";
  csv << "# version=" << becent::kVersion << "\n";
  csv << "# system=atom-molecule\n";
  csv << "# n_atm=" << n_atm << "\n";
  csv << "# omega=1\n";
  csv << "# ratio_min=" << fmt(grid.min) << "\n";
  csv << "# ratio_max=" << fmt(grid.max) << "\n";
  csv << "# steps=" << grid.steps << "\n";
  csv << "# threshold_estimate=" << fmt(threshold) << "\n";
  csv << "# threshold_definition=delta/Omega of the steepest decrease of ground-state"
         " <n_a>/N_atm (nested grid refinement on the sweep interval)\n";
  csv << "ratio,entropy,mean_atoms_scaled,theta_scaled\n";
  for (const auto& rec : records)
    csv << fmt(rec.ratio) << ',' << fmt(rec.entropy) << ','
        << fmt(rec.extra.at("mean_atoms_scaled")) << ','
        << fmt(rec.extra.at("theta_scaled")) << "\n";
  write_atomic(out, csv.str());
  return 0;
}

int cmd_states(const std::string& invocation, int n, const std::string& state_spec,
               const std::string& out) {
  becent::StateVector psi = [&]() -> becent::StateVector {
    if (state_spec == "mes") return becent::mes_state(becent::dimer_basis(n));
    if (state_spec == "localized") return becent::localized_state(n);
    if (state_spec == "bonding") return becent::bonding_state(n, false);
    if (state_spec == "antibonding") return becent::bonding_state(n, true);
    if (state_spec.rfind("cat:", 0) == 0) {
      int d = 0;
      try {
        d = std::stoi(state_spec.substr(4));
      } catch (const std::exception&) {
        throw std::invalid_argument("--state cat:D needs an integer D");
      }
      return becent::cat_state(n, d);
    }
    throw std::invalid_argument(
        "--state must be one of mes, localized, bonding, antibonding, cat:D");
  }();

  std::ostringstream csv;
  csv << "# " << invocation << "\n";
  csv << "# version=" << becent::kVersion << "\n";
  csv << "# n=" << n << "\n";
  csv << "# state=" << state_spec << "\n";
  csv << "# entropy=" << fmt(becent::mode_entropy(psi)) << "\n";
  csv << "index,n_first,n_second,re,im,prob\n";
  for (int i = 0; i < psi.dim(); ++i) {
    const auto& label = psi.basis().label(i);
    const auto a = psi.amplitude(i);
    csv << i << ',' << label.first << ',' << label.second << ',' << fmt(a.real()) << ','
        << fmt(a.imag()) << ',' << fmt(std::norm(a)) << "\n";
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    write_atomic(out, csv.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mode entanglement of two-mode Bose-Einstein condensates"};
  app.require_subcommand(1);

  const std::string invocation = join_invocation(argc, argv);

  int n = 0;
  int n_atm = 0;
  int steps = 0;
  double chi = 0.0;
  SweepGrid grid;
  std::string omega_spec = "critical";
  std::string state_spec;
  std::string out;
  double t_max = 0.0;

  auto* ground = app.add_subcommand(
      "ground-sweep", "Ground-state entanglement vs EJ/K for the Josephson dimer");
  ground->add_option("--n", n, "particle number N")->required()->check(CLI::PositiveNumber);
  ground->add_option("--ratio-min", grid.min, "smallest EJ/K")->required();
  ground->add_option("--ratio-max", grid.max, "largest EJ/K")->required();
  ground->add_option("--steps", grid.steps, "number of grid points (>= 2)")->required();
  ground->add_option("--out", out, "output CSV path")->required();

  auto* dynamics = app.add_subcommand(
      "dynamics", "Evolution of the minimal-Jx state under chi*Jz^2 - omega*Jx");
  dynamics->add_option("--n", n, "particle number N")->required()->check(CLI::PositiveNumber);
  dynamics->add_option("--chi", chi, "Jz^2 coefficient (> 0)")->required();
  dynamics->add_option("--omega", omega_spec,
                       "Jx coefficient, a number or \"critical\" (= chi*N/2)");
  auto* tmax_opt =
      dynamics->add_option("--t-max", t_max, "end of the time grid (default 2.4*t_c)");
  dynamics->add_option("--steps", steps, "number of grid points (>= 2)")
      ->default_val(512);
  dynamics->add_option("--out", out, "output CSV path")->required();

  auto* atom = app.add_subcommand(
      "atom-molecule", "Atom-molecule ground-state sweep over delta/Omega");
  atom->add_option("--n-atm", n_atm, "total atom number N_atm")
      ->required()
      ->check(CLI::PositiveNumber);
  atom->add_option("--ratio-min", grid.min, "smallest delta/Omega")->required();
  atom->add_option("--ratio-max", grid.max, "largest delta/Omega")->required();
  atom->add_option("--steps", grid.steps, "number of grid points (>= 2)")->required();
  atom->add_option("--out", out, "output CSV path")->required();

  auto* states = app.add_subcommand("states", "Print amplitudes and entropy of a named state");
  states->add_option("--n", n, "particle number N")->required()->check(CLI::PositiveNumber);
  states->add_option("--state", state_spec, "mes | localized | bonding | antibonding | cat:D")
      ->required();
  states->add_option("--out", out, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ground) return cmd_ground_sweep(invocation, n, grid, out);
    if (*dynamics) {
      std::optional<double> t_max_opt;
      if (tmax_opt->count() > 0) t_max_opt = t_max;
      return cmd_dynamics(invocation, n, chi, omega_spec, t_max_opt, steps, out);
    }
    if (*atom) return cmd_atom_molecule(invocation, n_atm, grid, out);
    if (*states) return cmd_states(invocation, n, state_spec, out);
  } catch (const becent::NumericalError& e) {
    std::cerr << "becent: numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "becent: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "becent: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
