#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cteleport/entanglement.hpp"
#include "cteleport/partition_scan.hpp"
#include "cteleport/report_json.hpp"
#include "cteleport/state.hpp"
#include "cteleport/state_io.hpp"
#include "cteleport/teleport.hpp"

namespace py = pybind11;
using namespace cteleport;

namespace {

std::vector<Amplitude> to_vector(std::span<const Amplitude> s) { return {s.begin(), s.end()}; }

Outcome outcome_from(int i, int j, int n) { return {i, j, n}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Transformation operators and unitarity criterion for controlled two-qubit "
            "teleportation through five-qubit channels";

  py::register_exception<StateFormatError>(m, "StateFormatError", PyExc_ValueError);

  py::class_<PureState>(m, "PureState")
      .def_property_readonly("num_qubits", &PureState::num_qubits)
      .def_property_readonly("amplitudes",
                             [](const PureState& s) { return to_vector(s.amplitudes()); })
      .def_property_readonly("was_renormalized", &PureState::was_renormalized)
      .def("__len__", &PureState::dim)
      .def("__getitem__",
           [](const PureState& s, std::size_t k) {
             if (k >= s.dim()) throw py::index_error();
             return s[k];
           })
      .def("to_json", [](const PureState& s) { return to_json(s).dump(); })
      .def("__repr__", [](const PureState& s) {
        return "<PureState num_qubits=" + std::to_string(s.num_qubits()) + ">";
      });

  m.def("make_state", &make_state, py::arg("num_qubits"), py::arg("amplitudes"));
  m.def("named_state", &named_state, py::arg("name"), py::arg("product_qubits") = 5);
  m.def("catalog_names", &catalog_names);
  m.def("basis_state", &basis_state, py::arg("num_qubits"), py::arg("index"));
  m.def("tensor", &tensor);
  m.def("permute_qubits", [](const PureState& s, std::vector<int> perm) {
    return permute_qubits(s, perm);
  });
  m.def("inner_product", &inner_product);
  m.def("project_subsystem",
        [](const PureState& s, const PureState& bra, std::vector<int> labels) {
          return project_subsystem(s, bra, labels);
        });
  m.def("parse_state", [](std::string_view text) { return parse_state(text); });
  m.def("load_state", &load_state);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_property_readonly("entries", &DensityMatrix::entries)
      .def_property_readonly("labels", &DensityMatrix::labels)
      .def("trace", &DensityMatrix::trace)
      .def("min_eigenvalue", &DensityMatrix::min_eigenvalue)
      .def("purity", [](const DensityMatrix& rho) { return purity(rho); });

  py::class_<MmesVerdict>(m, "MmesVerdict")
      .def_readonly("is_mmes", &MmesVerdict::is_mmes)
      .def_readonly("worst_pair", &MmesVerdict::worst_pair)
      .def_readonly("max_deviation", &MmesVerdict::max_deviation);

  py::class_<PurityReport>(m, "PurityReport")
      .def_readonly("pair_purities", &PurityReport::pair_purities)
      .def_readonly("single_purities", &PurityReport::single_purities)
      .def_readonly("mmes", &PurityReport::mmes)
      .def("to_json", [](const PurityReport& r) { return to_json(r).dump(); });

  m.def("partial_trace", &partial_trace, py::arg("state"), py::arg("keep"));
  m.def("purity", &purity);
  m.def("purity_table", &purity_table, py::arg("state"), py::arg("tol") = kDefaultTolerance);
  m.def("purity_eq8", &purity_eq8);
  m.def("mmes_check", &mmes_check, py::arg("state"), py::arg("tol"));

  py::class_<RoleAssignment>(m, "RoleAssignment")
      .def(py::init([](std::array<int, 2> alice, std::array<int, 2> bob, int charlie) {
             RoleAssignment r{alice, bob, charlie};
             r.validate();
             return r;
           }),
           py::arg("alice") = std::array<int, 2>{1, 2}, py::arg("bob") = std::array<int, 2>{3, 4},
           py::arg("charlie") = 5)
      .def_readonly("alice", &RoleAssignment::alice)
      .def_readonly("bob", &RoleAssignment::bob)
      .def_readonly("charlie", &RoleAssignment::charlie)
      .def("__eq__", [](const RoleAssignment& a, const RoleAssignment& b) { return a == b; })
      .def("__repr__", [](const RoleAssignment& r) { return "<RoleAssignment " + r.to_string() + ">"; });

  py::class_<TransformationOperator>(m, "TransformationOperator")
      .def_readonly("action", &TransformationOperator::action)
      .def_property_readonly("paper", &TransformationOperator::paper)
      .def_property_readonly("labels",
                             [](const TransformationOperator& op) {
                               return std::array<int, 3>{op.labels.i, op.labels.j, op.labels.n};
                             })
      .def_readonly("theta", &TransformationOperator::theta);

  py::class_<UnitarityVerdict>(m, "UnitarityVerdict")
      .def_readonly("unitary", &UnitarityVerdict::unitary)
      .def_readonly("defect", &UnitarityVerdict::defect);

  py::class_<CriterionReport>(m, "CriterionReport")
      .def_readonly("assignment", &CriterionReport::assignment)
      .def_readonly("theta", &CriterionReport::theta)
      .def_readonly("sigma111_defect", &CriterionReport::sigma111_defect)
      .def_readonly("sigma112_defect", &CriterionReport::sigma112_defect)
      .def_readonly("passed", &CriterionReport::pass)
      .def_readonly("purity_alice_pair", &CriterionReport::purity_alice_pair)
      .def_readonly("purity_bob_pair", &CriterionReport::purity_bob_pair)
      .def("to_json", [](const CriterionReport& r) { return to_json(r).dump(); });

  py::class_<Eq5Result>(m, "Eq5Result")
      .def_readonly("holds", &Eq5Result::holds)
      .def_readonly("max_deviation", &Eq5Result::max_deviation);

  py::class_<TeleportationRecord>(m, "TeleportationRecord")
      .def_property_readonly("outcome",
                             [](const TeleportationRecord& r) {
                               return std::array<int, 3>{r.outcome.i, r.outcome.j, r.outcome.n};
                             })
      .def_readonly("probability", &TeleportationRecord::probability)
      .def_readonly("bob_residual", &TeleportationRecord::bob_residual)
      .def_readonly("bob_corrected", &TeleportationRecord::bob_corrected)
      .def_readonly("fidelity", &TeleportationRecord::fidelity)
      .def_readonly("recoverable", &TeleportationRecord::recoverable);

  py::enum_<Correction>(m, "Correction")
      .value("adjoint", Correction::adjoint)
      .value("inverse", Correction::inverse);

  m.def(
      "transformation_operator",
      [](const PureState& channel, const RoleAssignment& assign, int i, int j, int n,
         double theta) { return transformation_operator(channel, assign, outcome_from(i, j, n), theta); },
      py::arg("channel"), py::arg("assignment"), py::arg("i"), py::arg("j"), py::arg("n"),
      py::arg("theta"));
  m.def(
      "projected_operator",
      [](const PureState& channel, const RoleAssignment& assign, int i, int j, int n,
         double theta) { return projected_operator(channel, assign, outcome_from(i, j, n), theta); },
      py::arg("channel"), py::arg("assignment"), py::arg("i"), py::arg("j"), py::arg("n"),
      py::arg("theta"));
  m.def("is_unitary", py::overload_cast<const Operator&, double>(&is_unitary), py::arg("matrix"),
        py::arg("tol") = kDefaultTolerance);
  m.def("is_unitary", py::overload_cast<const TransformationOperator&, double>(&is_unitary),
        py::arg("op"), py::arg("tol") = kDefaultTolerance);
  m.def("criterion_check", &criterion_check, py::arg("channel"), py::arg("assignment"),
        py::arg("theta"), py::arg("tol") = kDefaultTolerance);
  m.def("eq5_factorization", &eq5_factorization, py::arg("channel"), py::arg("assignment"),
        py::arg("theta"), py::arg("tol") = kDefaultTolerance);
  m.def("simulate", &simulate, py::arg("channel"), py::arg("assignment"), py::arg("theta"),
        py::arg("input"), py::arg("correction") = Correction::adjoint);
  m.def("average_fidelity", &average_fidelity);
  m.def("simulation_to_json",
        [](const std::vector<TeleportationRecord>& records) { return to_json(records).dump(); });

  py::enum_<ThetaKind>(m, "ThetaKind")
      .value("all_theta", ThetaKind::all_theta)
      .value("discrete_theta", ThetaKind::discrete_theta)
      .value("none", ThetaKind::none);

  py::class_<ThetaClassification>(m, "ThetaClassification")
      .def_readonly("kind", &ThetaClassification::kind)
      .def_readonly("roots", &ThetaClassification::roots)
      .def_readonly("min_defect", &ThetaClassification::min_defect)
      .def_readonly("argmin_theta", &ThetaClassification::argmin_theta);

  py::class_<ScanEntry>(m, "ScanEntry")
      .def_readonly("assignment", &ScanEntry::assignment)
      .def_readonly("classification", &ScanEntry::classification)
      .def_readonly("purity_alice", &ScanEntry::purity_alice)
      .def_readonly("purity_bob", &ScanEntry::purity_bob);

  py::class_<ScanReport>(m, "ScanReport")
      .def_readonly("entries", &ScanReport::entries)
      .def("to_json", [](const ScanReport& r) { return to_json(r).dump(); });

  py::class_<OptimalTheta>(m, "OptimalTheta")
      .def_readonly("theta", &OptimalTheta::theta)
      .def_readonly("min_defect", &OptimalTheta::min_defect);

  m.def("enumerate_assignments", &enumerate_assignments);
  m.def("combined_defect", &combined_defect);
  m.def("classify_theta", &classify_theta, py::arg("channel"), py::arg("assignment"),
        py::arg("tol") = kDefaultTolerance);
  m.def("scan", &scan, py::arg("channel"), py::arg("tol") = kDefaultTolerance);
  m.def("optimal_theta", &optimal_theta, py::arg("channel"), py::arg("assignment"),
        py::arg("tol") = kDefaultTolerance);
}
