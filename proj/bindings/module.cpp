// Python bindings: numpy arrays at the boundary, analysis objects as opaque
// handles. Density-matrix arguments are validated on entry.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lindoa/attraction.hpp"
#include "lindoa/evolution.hpp"
#include "lindoa/xxz.hpp"

namespace py = pybind11;
using namespace lindoa;

namespace {

std::vector<CMat> as_matrices(const std::vector<Operator>& ops) {
  std::vector<CMat> out;
  out.reserve(ops.size());
  for (const Operator& o : ops) out.push_back(o.entries);
  return out;
}

DensityMatrix density_arg(const CMat& m, const Tolerances& tol) {
  return make_density(Operator(m), tol);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Attraction-domain analysis for steady states of Lindblad open quantum systems";

  py::register_exception<DefectiveSpectrumError>(m, "DefectiveSpectrumError", PyExc_RuntimeError);

  py::class_<Tolerances>(m, "Tolerances")
      .def(py::init<>())
      .def_readwrite("herm", &Tolerances::herm)
      .def_readwrite("trace", &Tolerances::trace)
      .def_readwrite("psd", &Tolerances::psd)
      .def_readwrite("peripheral", &Tolerances::peripheral)
      .def_readwrite("membership", &Tolerances::membership)
      .def_readwrite("rank", &Tolerances::rank);

  py::class_<DensityCheck>(m, "DensityCheck")
      .def_readonly("ok", &DensityCheck::ok)
      .def_readonly("herm_error", &DensityCheck::herm_error)
      .def_readonly("trace_error", &DensityCheck::trace_error)
      .def_readonly("min_eigenvalue", &DensityCheck::min_eigenvalue)
      .def_readonly("violation", &DensityCheck::violation);

  py::class_<LindbladSystem>(m, "LindbladSystem")
      .def(py::init([](const CMat& h, const std::vector<CMat>& ls,
                       const std::vector<int>& factors, const Tolerances& tol) {
             HilbertDim dim = factors.empty() ? HilbertDim(static_cast<int>(h.rows()))
                                              : HilbertDim(static_cast<int>(h.rows()), factors);
             std::vector<Operator> couplings;
             couplings.reserve(ls.size());
             for (const CMat& l : ls) couplings.emplace_back(dim, l);
             return make_system(Operator(dim, h), std::move(couplings), tol);
           }),
           py::arg("hamiltonian"), py::arg("lindblad_ops") = std::vector<CMat>{},
           py::arg("factors") = std::vector<int>{}, py::arg("tol") = Tolerances{})
      .def_property_readonly("dim", [](const LindbladSystem& s) { return s.dim.n; })
      .def_property_readonly("factors", [](const LindbladSystem& s) { return s.dim.factors; })
      .def_property_readonly("hamiltonian",
                             [](const LindbladSystem& s) { return s.hamiltonian.entries; })
      .def_property_readonly("lindblad_ops",
                             [](const LindbladSystem& s) { return as_matrices(s.couplings); });

  py::enum_<SuperopKind>(m, "SuperopKind")
      .value("Generator", SuperopKind::Generator)
      .value("AdjointGenerator", SuperopKind::AdjointGenerator);

  py::class_<Superoperator>(m, "Superoperator")
      .def_property_readonly("matrix", [](const Superoperator& s) { return s.matrix; })
      .def_property_readonly("dim", [](const Superoperator& s) { return s.dim.n; })
      .def_readonly("kind", &Superoperator::kind);

  py::class_<SteadyCheck>(m, "SteadyCheck")
      .def_readonly("steady", &SteadyCheck::steady)
      .def_readonly("residual", &SteadyCheck::residual);

  py::class_<SpectralData>(m, "SpectralData")
      .def_property_readonly("eigenvalues", [](const SpectralData& sd) { return sd.eigenvalues; })
      .def_property_readonly("right_ops", [](const SpectralData& sd) { return as_matrices(sd.right_ops); })
      .def_property_readonly("left_ops", [](const SpectralData& sd) { return as_matrices(sd.left_ops); })
      .def_readonly("peripheral", &SpectralData::peripheral)
      .def_readonly("zero_modes", &SpectralData::zero_modes)
      .def_readonly("J", &SpectralData::J)
      .def_readonly("J0", &SpectralData::J0)
      .def_readonly("defective", &SpectralData::defective)
      .def_readonly("defect_reason", &SpectralData::defect_reason)
      .def_readonly("spectral_radius", &SpectralData::spectral_radius)
      .def_readonly("decay_gap", &SpectralData::decay_gap);

  py::class_<ConservedSet>(m, "ConservedSet")
      .def_property_readonly("observables",
                             [](const ConservedSet& cs) { return as_matrices(cs.observables); })
      .def_readonly("frequencies", &ConservedSet::frequencies)
      .def_readonly("n_conserved", &ConservedSet::n_conserved);

  py::class_<AttractionCertificate>(m, "AttractionCertificate")
      .def_property_readonly("deltas", [](const AttractionCertificate& c) { return c.deltas; })
      .def_readonly("max_delta", &AttractionCertificate::max_delta)
      .def_readonly("tol", &AttractionCertificate::tol)
      .def_readonly("member", &AttractionCertificate::member)
      .def_readonly("marginal", &AttractionCertificate::marginal)
      .def_readonly("steady_residual", &AttractionCertificate::steady_residual);

  py::class_<AffineDoA>(m, "AffineDoA")
      .def_property_readonly("base", [](const AffineDoA& d) { return d.base.op.entries; })
      .def_property_readonly("constraints",
                             [](const AffineDoA& d) { return as_matrices(d.constraints); })
      .def_property_readonly("targets", [](const AffineDoA& d) { return d.targets; })
      .def_readonly("decaying_dim", &AffineDoA::decaying_dim);

  py::class_<AsymptoticState>(m, "AsymptoticState")
      .def_readonly("has_limit", &AsymptoticState::has_limit)
      .def_property_readonly("limit",
                             [](const AsymptoticState& a) -> py::object {
                               if (!a.has_limit) return py::none();
                               return py::cast(a.limit.op.entries);
                             })
      .def_readonly("frequencies", &AsymptoticState::frequencies)
      .def_readonly("magnitudes", &AsymptoticState::magnitudes);

  py::class_<SteadyStateReport>(m, "SteadyStateReport")
      .def_readonly("kernel_dim", &SteadyStateReport::kernel_dim)
      .def_property_readonly("representatives",
                             [](const SteadyStateReport& r) {
                               std::vector<CMat> out;
                               for (const DensityMatrix& d : r.representatives)
                                 out.push_back(d.op.entries);
                               return out;
                             })
      .def_readonly("unique", &SteadyStateReport::unique)
      .def_readonly("doa_measure_zero", &SteadyStateReport::doa_measure_zero);

  py::class_<Trajectory>(m, "Trajectory")
      .def_readonly("times", &Trajectory::times)
      .def_property_readonly("states",
                             [](const Trajectory& t) {
                               std::vector<CMat> out;
                               for (const DensityMatrix& d : t.states) out.push_back(d.op.entries);
                               return out;
                             })
      .def_readonly("trace_errors", &Trajectory::trace_errors)
      .def_readonly("min_eigenvalues", &Trajectory::min_eigenvalues);

  py::class_<LimitProbe>(m, "LimitProbe")
      .def_readonly("has_limit", &LimitProbe::has_limit)
      .def_property_readonly("state",
                             [](const LimitProbe& p) -> py::object {
                               if (!p.has_limit) return py::none();
                               return py::cast(p.state.op.entries);
                             })
      .def_readonly("time_reached", &LimitProbe::time_reached);

  // operator algebra
  m.def("hs_inner", [](const CMat& a, const CMat& b) { return hs_inner(Operator(a), Operator(b)); });
  m.def("hs_norm", [](const CMat& a) { return hs_norm(Operator(a)); });
  m.def("kron", [](const CMat& a, const CMat& b) { return kron(Operator(a), Operator(b)).entries; });
  m.def("embed_site",
        [](const CMat& op, int site, const std::vector<int>& factors) {
          int n = 1;
          for (int f : factors) n *= f;
          return embed_site(Operator(op), site, HilbertDim(n, factors)).entries;
        },
        py::arg("op"), py::arg("site"), py::arg("factors"));
  m.def("vectorize", [](const CMat& a) { return vectorize(Operator(a)); });
  m.def("devectorize", [](const CVec& v) { return devectorize(v).entries; });
  m.def("pauli", [](char symbol) { return pauli(symbol).entries; });
  m.def("pauli_string", [](const std::string& s) { return pauli_string(s).entries; });
  m.def("qubit_ket", &qubit_ket);
  m.def("check_density",
        [](const CMat& op, const Tolerances& tol) { return check_density(Operator(op), tol); },
        py::arg("op"), py::arg("tol") = Tolerances{});

  // generator and spectrum
  m.def("build_generator", &build_generator);
  m.def("build_adjoint", &build_adjoint);
  m.def("apply", [](const Superoperator& s, const CMat& x) { return apply(s, Operator(x)).entries; });
  m.def("is_steady_state",
        [](const LindbladSystem& sys, const CMat& rho, double tol, const Tolerances& vtol) {
          return is_steady_state(sys, density_arg(rho, vtol), tol);
        },
        py::arg("system"), py::arg("rho"), py::arg("tol") = 1e-8, py::arg("vtol") = Tolerances{});
  m.def("kernel_basis",
        [](const Superoperator& s, double tol_rank) { return as_matrices(kernel_basis(s, tol_rank)); },
        py::arg("superop"), py::arg("tol_rank") = 1e-10);
  m.def("full_spectrum", &full_spectrum, py::arg("generator"), py::arg("tol") = Tolerances{});
  m.def("peripheral_observables", &peripheral_observables);
  m.def("identification_vector",
        [](const ConservedSet& cs, const CMat& rho, const Tolerances& tol) {
          return identification_vector(cs, density_arg(rho, tol));
        },
        py::arg("conserved"), py::arg("rho"), py::arg("tol") = Tolerances{});

  // attraction domains
  m.def("membership",
        [](const LindbladSystem& sys, const SpectralData& sd, const ConservedSet& cs,
           const CMat& steady, const CMat& initial, double tol, const Tolerances& vtol) {
          return membership(sys, sd, cs, density_arg(steady, vtol), density_arg(initial, vtol), tol);
        },
        py::arg("system"), py::arg("spectral"), py::arg("conserved"), py::arg("steady"),
        py::arg("initial"), py::arg("tol") = 1e-7, py::arg("vtol") = Tolerances{});
  m.def("affine_doa",
        [](const SpectralData& sd, const ConservedSet& cs, const CMat& steady,
           const Tolerances& vtol) { return affine_doa(sd, cs, density_arg(steady, vtol)); },
        py::arg("spectral"), py::arg("conserved"), py::arg("steady"), py::arg("vtol") = Tolerances{});
  m.def("affine_contains",
        [](const AffineDoA& doa, const CMat& rho, double tol, const Tolerances& vtol) {
          return affine_contains(doa, density_arg(rho, vtol), tol);
        },
        py::arg("doa"), py::arg("rho"), py::arg("tol") = 1e-7, py::arg("vtol") = Tolerances{});
  m.def("asymptotic_state",
        [](const SpectralData& sd, const CMat& rho0, double tol, const Tolerances& vtol) {
          return asymptotic_state(sd, density_arg(rho0, vtol), tol);
        },
        py::arg("spectral"), py::arg("rho0"), py::arg("tol") = 1e-7, py::arg("vtol") = Tolerances{});
  m.def("steady_report", &steady_report, py::arg("system"), py::arg("generator"),
        py::arg("spectral"));

  // time evolution
  m.def("propagate",
        [](const Superoperator& g, const CMat& rho0, const std::vector<double>& times,
           const Tolerances& vtol) { return propagate(g, density_arg(rho0, vtol), times); },
        py::arg("generator"), py::arg("rho0"), py::arg("times"), py::arg("vtol") = Tolerances{});
  m.def("distance_curve",
        [](const Trajectory& traj, const CMat& ref, const Tolerances& vtol) {
          return distance_curve(traj, density_arg(ref, vtol));
        },
        py::arg("trajectory"), py::arg("ref"), py::arg("vtol") = Tolerances{});
  m.def("converged_limit",
        [](const Superoperator& g, const CMat& rho0, double gap, double tol,
           const Tolerances& vtol) { return converged_limit(g, density_arg(rho0, vtol), gap, tol); },
        py::arg("generator"), py::arg("rho0"), py::arg("decay_gap"), py::arg("tol") = 1e-9,
        py::arg("vtol") = Tolerances{});

  // XXZ case study
  m.def("build_xxz",
        [](int n_sites, double g_minus, double g_plus) {
          return build_xxz(XxzSpec{n_sites, g_minus, g_plus});
        },
        py::arg("n_sites") = 4, py::arg("g_minus") = 2.0, py::arg("g_plus") = 1.0);
  m.def("spin_current_op",
        [](int n_sites, int site) { return spin_current_op(n_sites, site).entries; },
        py::arg("n_sites"), py::arg("site"));
  m.def("sector_projectors",
        [](int n_sites) { return as_matrices(sector_projectors(n_sites)); }, py::arg("n_sites"));
  m.def("xxz_singlet_state", []() { return xxz_singlet_state().op.entries; });
  m.def("xxz_current_state",
        [](const SpectralData& sd) { return xxz_current_state(sd).op.entries; });
  m.def("reference_states", []() {
    auto [a, b] = reference_states();
    return py::make_tuple(a.op.entries, b.op.entries);
  });

#ifdef LINDOA_VERSION
  m.attr("__version__") = LINDOA_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
