#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cli.hpp"
#include "gauge_torsion/chern.hpp"
#include "gauge_torsion/errors.hpp"
#include "gauge_torsion/matfp.hpp"
#include "gauge_torsion/serialize.hpp"
#include "gauge_torsion/steenrod.hpp"
#include "gauge_torsion/suspension.hpp"
#include "gauge_torsion/torsion.hpp"

namespace py = pybind11;
using namespace gauge;

namespace {

  Prime prime(std::uint64_t p) { return Prime(p); }

  std::size_t dim(std::int64_t n)
  {
    if (n < 2)
      throw DomainError("n must be >= 2, got " + std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  py::list to_py(const IntMatrix& m)
  {
    py::list rows;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < m.dim(); ++j)
        row.append(py::int_(py::str(m(i, j).get_str())));
      rows.append(row);
    }
    return rows;
  }

  py::list to_py(const FpMatrix& m)
  {
    py::list rows;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < m.dim(); ++j)
        row.append(m(i, j).residue());
      rows.append(row);
    }
    return rows;
  }

  py::object from_json(const ordered_json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_gauge_torsion, m)
{
  m.doc() = "Exact computations deciding p-torsion in Map_k(S^2, BPU(n))";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_TypeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<ContradictionError>(m, "ContradictionError", PyExc_RuntimeError);

  m.def("binom_mod", [](std::int64_t n, std::int64_t j, std::uint64_t p) { return binom_mod(n, j, prime(p)).residue(); },
        py::arg("n"), py::arg("j"), py::arg("p"));
  m.def("p_power_ceil", [](std::uint64_t n, std::uint64_t p) { return p_power_ceil(n, prime(p)); }, py::arg("n"),
        py::arg("p"));

  m.def("build_B", [](std::int64_t n) { return to_py(build_B(dim(n))); }, py::arg("n"));
  m.def("build_A", [](std::int64_t n) { return to_py(build_A(dim(n))); }, py::arg("n"));
  m.def("build_D", [](std::int64_t n) { return to_py(build_D(dim(n))); }, py::arg("n"));
  m.def("order_of_B",
        [](std::int64_t n, std::uint64_t p) {
          const Prime q = prime(p);
          return mat_order_mod_p(mat_reduce(build_B(dim(n)), q), p_power_ceil(dim(n), q) * p);
        },
        py::arg("n"), py::arg("p"));
  m.def("derive_recurrence", [](std::int64_t n, std::uint64_t p) { return to_py(derive_recurrence(dim(n), prime(p))); },
        py::arg("n"), py::arg("p"));
  m.def("solve_alpha_p",
        [](std::int64_t n, std::uint64_t p, std::int64_t k) { return solve_alpha_p(dim(n), prime(p), k).alpha_p.residue(); },
        py::arg("n"), py::arg("p"), py::arg("k"));
  m.def("lift_power_sum",
        [](std::size_t m_, std::size_t n, std::uint64_t p) { return lift_power_sum(m_, n, prime(p)).to_string(); },
        py::arg("m"), py::arg("n"), py::arg("p"));

  m.def("verify_newton", [](std::size_t n, std::size_t i, std::uint64_t p) { return verify_newton(n, i, prime(p)).holds; },
        py::arg("n"), py::arg("i"), py::arg("p"));
  m.def("verify_milnor_c2",
        [](std::size_t n, std::uint64_t p, unsigned l) { return verify_milnor_c2(n, prime(p), l).holds; },
        py::arg("n"), py::arg("p"), py::arg("l"));
  m.def("verify_conjugation", [](std::int64_t n) { return verify_conjugation(dim(n)).holds; }, py::arg("n"));

  m.def("decide_p",
        [](std::int64_t n, std::int64_t k, std::uint64_t p, bool trace) {
          return from_json(to_json(decide_p(n, k, prime(p)), trace));
        },
        py::arg("n"), py::arg("k"), py::arg("p"), py::arg("trace") = false);
  m.def("decide_global",
        [](std::int64_t n, std::int64_t k, bool trace) { return from_json(to_json(decide_global(n, k), trace)); },
        py::arg("n"), py::arg("k"), py::arg("trace") = false);

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end in process; returns (exit_code, stdout, stderr).");
}
