#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cohlab/cli.hpp"
#include "cohlab/coherence.hpp"
#include "cohlab/correlations.hpp"
#include "cohlab/error.hpp"
#include "cohlab/lsdecomp.hpp"
#include "cohlab/relations.hpp"
#include "cohlab/states.hpp"

namespace py = pybind11;
using namespace cohlab;

namespace {

using CArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) {
    throw DimensionMismatch("expected a square 2-d array");
  }
  const auto d = static_cast<std::size_t>(a.shape(0));
  return ComplexMatrix(d, std::vector<Complex>(a.data(), a.data() + d * d));
}

CArray to_array(const ComplexMatrix& m) {
  const auto d = static_cast<py::ssize_t>(m.dim());
  CArray out({d, d});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

BellOrdering parse_ordering(const std::string& name) {
  if (name == "phi_first") return BellOrdering::PhiFirst;
  if (name == "phi_outer") return BellOrdering::PhiOuter;
  throw InvalidParams("ordering must be 'phi_first' or 'phi_outer', got '" + name + "'");
}

RelationId parse_relation(const std::string& name) {
  const auto id = relation_from_name(name);
  if (!id) throw ParseError("unknown relation '" + name + "'");
  return *id;
}

py::dict terms_dict(const RelationReport& r) {
  py::dict d;
  for (const auto& [k, v] : r.terms) d[py::str(k)] = v;
  return d;
}

}  // namespace

PYBIND11_MODULE(_cohlab, m) {
  m.doc() = "basis-dependent quantum coherence relations";

  py::register_exception<Error>(m, "CohlabError", PyExc_ValueError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const CArray& a, std::optional<Dims> dims) {
             ComplexMatrix mat = to_matrix(a);
             return dims ? DensityMatrix(std::move(mat), *dims) : DensityMatrix(std::move(mat));
           }),
           py::arg("matrix"), py::arg("dims") = py::none())
      .def_property_readonly("matrix", [](const DensityMatrix& r) { return to_array(r.matrix()); })
      .def_property_readonly("dims", &DensityMatrix::dims)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("reduced", [](const DensityMatrix& r, std::vector<std::size_t> keep) { return r.reduced(keep); })
      .def("purity", &DensityMatrix::purity);

  py::class_<Basis>(m, "Basis")
      .def(py::init([](const CArray& u, std::string label) { return Basis(to_matrix(u), std::move(label)); }),
           py::arg("unitary"), py::arg("label") = "custom")
      .def_property_readonly("unitary", [](const Basis& b) { return to_array(b.unitary()); })
      .def_property_readonly("label", &Basis::label)
      .def_property_readonly("dim", &Basis::dim);

  py::class_<RelationReport>(m, "RelationReport")
      .def_property_readonly("relation", [](const RelationReport& r) { return std::string(relation_name(r.relation_id)); })
      .def_readonly("lhs", &RelationReport::lhs)
      .def_readonly("rhs", &RelationReport::rhs)
      .def_readonly("slack", &RelationReport::slack)
      .def_readonly("holds", &RelationReport::holds)
      .def_property_readonly("terms", &terms_dict)
      .def("__repr__", [](const RelationReport& r) {
        return "<RelationReport " + std::string(relation_name(r.relation_id)) + " lhs=" + std::to_string(r.lhs) +
               " rhs=" + std::to_string(r.rhs) + " holds=" + (r.holds ? "True" : "False") + ">";
      });

  py::class_<LSDecomposition>(m, "LSDecomposition")
      .def_readonly("lam", &LSDecomposition::lambda)
      .def_readonly("K", &LSDecomposition::K)
      .def_readonly("rho_s", &LSDecomposition::rho_s)
      .def_readonly("rho_e", &LSDecomposition::rho_e)
      .def("recompose", [](const LSDecomposition& ls) { return to_array(ls.recompose()); });

  // states and bases
  m.def("computational_basis", &computational_basis, py::arg("d"));
  m.def("fourier_basis", &fourier_basis, py::arg("d"));
  m.def("hadamard_basis", &hadamard_basis);
  m.def("circular_basis", &circular_basis);
  m.def("product_basis", &product_basis, py::arg("a"), py::arg("b"));
  m.def("random_basis", py::overload_cast<std::size_t, std::uint64_t>(&random_basis), py::arg("d"), py::arg("seed"));
  m.def("maximally_coherent", &maximally_coherent, py::arg("d"));
  m.def("maximally_mixed", &maximally_mixed, py::arg("dims"));
  m.def("random_pure", py::overload_cast<const Dims&, std::uint64_t>(&random_pure), py::arg("dims"), py::arg("seed"));
  m.def("random_mixed", py::overload_cast<const Dims&, std::uint64_t>(&random_mixed), py::arg("dims"),
        py::arg("seed"));
  m.def(
      "bell_diagonal",
      [](std::array<double, 4> d, const std::string& ordering) {
        return bell_diagonal(BellDiagonalParams(d), parse_ordering(ordering));
      },
      py::arg("d"), py::arg("ordering") = "phi_first");
  m.def(
      "horodecki_state", [](double gamma) { return horodecki_state(HorodeckiParams(gamma)); }, py::arg("gamma"));

  // entropies and coherence
  m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"));
  m.def("binary_entropy", &binary_entropy, py::arg("x"));
  m.def("rel_ent_coherence", &rel_ent_coherence, py::arg("rho"), py::arg("basis"));
  m.def("dephase", &dephase, py::arg("rho"), py::arg("basis"));
  m.def(
      "measure", [](const DensityMatrix& rho, const Basis& b) { return measure(rho, b).probabilities(); },
      py::arg("rho"), py::arg("basis"));

  // correlations
  m.def("conditional_entropy", &conditional_entropy, py::arg("rho_ab"));
  m.def("mutual_information", &mutual_information, py::arg("rho_ab"));
  m.def("classical_correlation", &classical_correlation_J, py::arg("rho_ab"));
  m.def(
      "discord",
      [](const DensityMatrix& rho) {
        const CorrelationSet c = correlation_set(rho);
        if (!c.discord) throw Unsupported("discord: only two-qubit states are supported");
        return *c.discord;
      },
      py::arg("rho_ab"));
  m.def(
      "concurrence", [](const DensityMatrix& rho) { return concurrence(rho).value; }, py::arg("rho_ab"));

  // overlaps and relations
  m.def("max_overlap", &max_overlap, py::arg("b1"), py::arg("b2"));
  m.def("overlap_b", &overlap_b, py::arg("bases"));
  m.def("check_two_basis_single", &check_two_basis_single, py::arg("rho"), py::arg("b1"), py::arg("b2"),
        py::arg("tol") = kSlackTol);
  m.def(
      "check_multi_basis_single",
      [](const DensityMatrix& rho, const std::vector<Basis>& bases, double tol) {
        return check_multi_basis_single(rho, bases, BasisOrdering::AsGiven, tol);
      },
      py::arg("rho"), py::arg("bases"), py::arg("tol") = kSlackTol);
  m.def("check_bipartite_two_basis", &check_bipartite_two_basis, py::arg("rho_ab"), py::arg("a1"), py::arg("a2"),
        py::arg("tol") = kSlackTol);
  m.def("check_bipartite_discord_improved", &check_bipartite_discord_improved, py::arg("rho_ab"), py::arg("a1"),
        py::arg("a2"), py::arg("tol") = kSlackTol);
  m.def(
      "check_multi_basis_bipartite",
      [](const DensityMatrix& rho, const std::vector<Basis>& bases, double tol) {
        return check_multi_basis_bipartite(rho, bases, BasisOrdering::AsGiven, tol);
      },
      py::arg("rho_ab"), py::arg("bases_a"), py::arg("tol") = kSlackTol);
  m.def(
      "check_tripartite",
      [](const DensityMatrix& rho, const Basis& a1, const Basis& a2, double tol) {
        TripartiteReport t = check_tripartite(rho, a1, a2, tol);
        return py::make_tuple(t.ab, t.ad, t.ssa_sum);
      },
      py::arg("rho_abd"), py::arg("a1"), py::arg("a2"), py::arg("tol") = kSlackTol);
  m.def("check_conditional_upper", &check_conditional_upper, py::arg("rho_ab"), py::arg("a1"), py::arg("a2"),
        py::arg("tol") = kSlackTol);
  m.def("fannes_coherence_upper", &fannes_coherence_upper, py::arg("rho"), py::arg("basis"),
        py::arg("tol") = kSlackTol);
  m.def("coherence_difference_bound", &coherence_difference_bound, py::arg("rho"), py::arg("b1"), py::arg("b2"),
        py::arg("tol") = kSlackTol);

  // LS decompositions
  m.def(
      "ls_bell_diagonal",
      [](std::array<double, 4> d, const std::string& ordering) {
        return ls_bell_diagonal(BellDiagonalParams(d), parse_ordering(ordering));
      },
      py::arg("d"), py::arg("ordering") = "phi_first");
  m.def(
      "ls_horodecki", [](double gamma) { return ls_horodecki(HorodeckiParams(gamma)); }, py::arg("gamma"));
  m.def("upper_bound_ls", &upper_bound_ls, py::arg("rho"), py::arg("ls"), py::arg("b1"), py::arg("b2"),
        py::arg("tol") = kSlackTol);

  // CLI building blocks
  m.def(
      "fuzz",
      [](const std::string& relation, std::uint64_t seed, std::uint64_t trials, std::uint64_t first_trial,
         double tol) {
        const cli::FuzzSummary s = cli::fuzz_relation(parse_relation(relation), seed, first_trial, trials, tol);
        py::dict d;
        d["relation"] = relation;
        d["trials"] = s.trials;
        d["min_slack"] = s.min_slack;
        d["worst_trial"] = s.worst_trial;
        d["violations"] = s.violations;
        return d;
      },
      py::arg("relation"), py::arg("seed") = 7, py::arg("trials") = 100, py::arg("first_trial") = 0,
      py::arg("tol") = kSlackTol);
  m.def(
      "figure_panel_csv", [](double d1, double d2) { return cli::figure_csv(cli::figure_panel(d1, d2)); },
      py::arg("d1"), py::arg("d2"));
}
