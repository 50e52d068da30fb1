#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

#include "becent/dynamics.hpp"
#include "becent/entanglement.hpp"
#include "becent/observables.hpp"
#include "becent/operators.hpp"
#include "becent/spectral.hpp"
#include "becent/version.hpp"

namespace py = pybind11;
using namespace becent;

PYBIND11_MODULE(becent, m) {
  m.doc() =
      "Mode entanglement of two-mode Bose-Einstein condensates: number bases, "
      "tridiagonal Hamiltonians, exact spectra, entropies, dynamics and sweeps.";
  m.attr("__version__") = kVersion;

  py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

  py::enum_<BasisKind>(m, "BasisKind")
      .value("Dimer", BasisKind::Dimer)
      .value("AtomMolecule", BasisKind::AtomMolecule);

  py::class_<FockBasis>(m, "FockBasis")
      .def_property_readonly("kind", &FockBasis::kind)
      .def_property_readonly("total", &FockBasis::total)
      .def_property_readonly("dim", &FockBasis::dim)
      .def_property_readonly("labels",
                             [](const FockBasis& b) {
                               std::vector<std::pair<int, int>> out;
                               out.reserve(b.labels().size());
                               for (const auto& l : b.labels())
                                 out.emplace_back(l.first, l.second);
                               return out;
                             })
      .def("__len__", &FockBasis::dim)
      .def("__eq__", [](const FockBasis& a, const FockBasis& b) { return a == b; });

  py::class_<StateVector>(m, "StateVector")
      .def(py::init<FockBasis, std::vector<std::complex<double>>>(), py::arg("basis"),
           py::arg("amplitudes"))
      .def_property_readonly("basis", &StateVector::basis)
      .def_property_readonly("amplitudes",
                             [](const StateVector& s) { return s.amplitudes(); })
      .def_property_readonly("dim", &StateVector::dim);

  py::class_<SymTriMatrix>(m, "SymTriMatrix")
      .def(py::init([](std::vector<double> diag, std::vector<double> sub) {
             if (diag.empty() || sub.size() + 1 != diag.size())
               throw std::invalid_argument(
                   "SymTriMatrix: need len(sub) == len(diag) - 1 >= 0");
             return SymTriMatrix{std::move(diag), std::move(sub)};
           }),
           py::arg("diag"), py::arg("sub"))
      .def_readonly("diag", &SymTriMatrix::diag)
      .def_readonly("sub", &SymTriMatrix::sub)
      .def_property_readonly("dim", &SymTriMatrix::dim)
      .def("max_abs", &SymTriMatrix::max_abs);

  py::class_<EigenDecomposition>(m, "EigenDecomposition")
      .def_readonly("eigenvalues", &EigenDecomposition::eigenvalues)
      .def_property_readonly("dim", &EigenDecomposition::dim)
      .def("eigenvector", [](const EigenDecomposition& e, int k) {
        if (k < 0 || k >= e.dim()) throw py::index_error("eigenvector index out of range");
        auto v = e.eigenvector(k);
        return std::vector<double>(v.begin(), v.end());
      });

  py::class_<GroundState>(m, "GroundState")
      .def_readonly("energy", &GroundState::energy)
      .def_readonly("vector", &GroundState::vector)
      .def_readonly("degenerate", &GroundState::degenerate);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_readonly("states", &Trajectory::states)
      .def_readonly("norms", &Trajectory::norms)
      .def_readonly("hamiltonian", &Trajectory::hamiltonian);

  py::class_<DynamicsRun>(m, "DynamicsRun")
      .def_readonly("n_particles", &DynamicsRun::n_particles)
      .def_readonly("chi", &DynamicsRun::chi)
      .def_readonly("omega", &DynamicsRun::omega)
      .def_readonly("t_critical", &DynamicsRun::t_critical)
      .def_readonly("trajectory", &DynamicsRun::trajectory)
      .def_readonly("entropy", &DynamicsRun::entropy)
      .def_readonly("jz", &DynamicsRun::jz);

  py::class_<SweepRecord>(m, "SweepRecord")
      .def_readonly("system", &SweepRecord::system)
      .def_readonly("total", &SweepRecord::total)
      .def_readonly("ratio", &SweepRecord::ratio)
      .def_readonly("entropy", &SweepRecord::entropy)
      .def_readonly("degenerate", &SweepRecord::degenerate)
      .def_readonly("extra", &SweepRecord::extra);

  py::class_<BondingRatioPoint>(m, "BondingRatioPoint")
      .def_readonly("n_particles", &BondingRatioPoint::n_particles)
      .def_readonly("bonding_entropy", &BondingRatioPoint::bonding_entropy)
      .def_readonly("max_entropy", &BondingRatioPoint::max_entropy)
      .def_readonly("ratio", &BondingRatioPoint::ratio);

  // Bases and helpers
  m.def("dimer_basis", &dimer_basis, py::arg("n_particles"));
  m.def("atom_molecule_basis", &atom_molecule_basis, py::arg("n_atoms_total"));
  m.def("log_binomial", &log_binomial, py::arg("n"), py::arg("k"));

  // Hamiltonians
  m.def("build_josephson", &build_josephson, py::arg("n_particles"),
        py::arg("interaction"), py::arg("bias"), py::arg("tunneling"));
  m.def("build_angular", &build_angular, py::arg("n_particles"), py::arg("chi"),
        py::arg("omega"));
  m.def("build_atom_molecule", &build_atom_molecule, py::arg("n_atoms_total"),
        py::arg("delta"), py::arg("omega"));
  m.def("apply",
        [](const SymTriMatrix& h, const StateVector& psi) { return apply(h, psi); },
        py::arg("h"), py::arg("psi"));
  m.def("expectation", &expectation, py::arg("h"), py::arg("psi"));

  // Spectra
  m.def("eigh_tridiagonal", &eigh_tridiagonal, py::arg("t"));
  m.def("ground_state", &ground_state, py::arg("basis"), py::arg("t"),
        py::arg("gap_tol") = 1e-9);

  // Entanglement
  m.def("reduced_spectrum",
        [](const StateVector& psi) { return reduced_spectrum(psi).probabilities; },
        py::arg("psi"));
  m.def("mode_entropy", &mode_entropy, py::arg("psi"));
  m.def("max_entanglement", &max_entanglement, py::arg("dim"));
  m.def("localized_state", &localized_state, py::arg("n_particles"));
  m.def("bonding_state", &bonding_state, py::arg("n_particles"), py::arg("anti") = false);
  m.def("cat_state", &cat_state, py::arg("n_particles"), py::arg("distance"));
  m.def("mes_state", &mes_state, py::arg("basis"),
        py::arg("phases") = std::vector<double>{});
  m.def("bonding_entropy_closed_form", &bonding_entropy_closed_form,
        py::arg("n_particles"));

  // Dynamics
  m.def("evolve", &evolve, py::arg("h"), py::arg("psi0"), py::arg("times"),
        py::arg("descriptor") = std::string{});
  m.def("evolve_rk4", &evolve_rk4, py::arg("h"), py::arg("psi0"), py::arg("times"),
        py::arg("dt"), py::arg("descriptor") = std::string{});
  m.def("critical_omega", &critical_omega, py::arg("n_particles"), py::arg("chi"));
  m.def("critical_time", &critical_time, py::arg("n_particles"), py::arg("chi"));
  m.def("jz_distribution", &jz_distribution, py::arg("psi"));
  m.def("dynamics_run", &dynamics_run, py::arg("n_particles"), py::arg("chi"),
        py::arg("omega"), py::arg("t_max"), py::arg("steps"));
  m.def("cat_generation_run", &cat_generation_run, py::arg("n_particles"),
        py::arg("chi"), py::arg("t_max"), py::arg("steps"));

  // Observables and sweeps
  m.def("mean_atom_number", &mean_atom_number, py::arg("psi"));
  m.def("coherence_correlator", &coherence_correlator, py::arg("psi"));
  m.def("ground_sweep_josephson", &ground_sweep_josephson, py::arg("n_particles"),
        py::arg("ratios"), py::arg("interaction") = 1.0);
  m.def("bonding_ratio_sweep", &bonding_ratio_sweep, py::arg("particle_numbers"));
  m.def("ground_sweep_atom_molecule", &ground_sweep_atom_molecule,
        py::arg("n_atoms_total"), py::arg("ratios"), py::arg("omega") = 1.0);
  m.def("molecular_threshold", &molecular_threshold, py::arg("n_atoms_total"),
        py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-6, py::arg("omega") = 1.0);
}
