#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arrpi/analysis.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/export.hpp"
#include "arrpi/invariants.hpp"
#include "arrpi/io.hpp"
#include "arrpi/lac.hpp"
#include "arrpi/svg.hpp"
#include "arrpi/tietze.hpp"

namespace py = pybind11;
using namespace arrpi;

namespace {

py::object to_py_int(const Integer& v) { return py::module_::import("builtins").attr("int")(v.str()); }

IntegerMatrix to_matrix(const std::vector<std::vector<py::int_>>& rows) {
  if (rows.empty()) throw InputError("empty matrix");
  IntegerMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InputError("ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = Integer(py::str(rows[i][j]).cast<std::string>());
  }
  return m;
}

std::vector<IntegerMatrix> to_matrices(const std::vector<std::vector<std::vector<py::int_>>>& images) {
  std::vector<IntegerMatrix> out;
  for (const auto& m : images) out.push_back(to_matrix(m));
  return out;
}

Analysis analysis_of(const std::string& text) { return analyze(parse_arrangement(text)); }

py::dict meridians(const std::string& text) {
  Analysis a = analysis_of(text);
  py::dict out;
  for (std::size_t i = 0; i < a.meridians.line_meridians.size(); ++i)
    out[py::str("L" + std::to_string(i + 1))] = to_string(a.meridians.line_meridians[i]);
  for (std::size_t j = 0; j < a.meridians.point_meridians.size(); ++j)
    out[py::str(point_name(j + 1))] = to_string(a.meridians.point_meridians[j]);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fundamental groups of real line arrangement complements";

  static py::handle error = py::exception<Error>(m, "ArrpiError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("exit_code") = e.exit_code();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Presentation>(m, "Presentation")
      .def(py::init([](const std::vector<std::string>& generators, const std::vector<std::string>& relators) {
             Presentation p;
             p.names = GeneratorNames(generators);
             for (const auto& r : relators) p.relators.push_back(Relation{parse_word(r, &p.names), ""});
             p.validate();
             return p;
           }),
           py::arg("generators"), py::arg("relators"))
      .def_property_readonly("generators", [](const Presentation& p) { return p.names.names(); })
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators) out.push_back(to_string(r.relator, &p.names));
                               return out;
                             })
      .def_property_readonly("origins",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators) out.push_back(r.origin);
                               return out;
                             })
      .def("text", &to_text)
      .def("json", &to_json)
      .def("gap", &to_gap)
      .def_static("parse", [](const std::string& text) { return parse_presentation(text); })
      .def("__repr__", &compact);

  m.def("normalize", [](const std::string& text) { return print_arrangement(parse_arrangement(text)); },
        py::arg("arrangement"), "Canonical text form of an arrangement file");
  m.def("complement", [](const std::string& text) { return analysis_of(text).complement(); },
        py::arg("arrangement"));
  m.def("meridians", &meridians, py::arg("arrangement"));
  m.def(
      "orbifold",
      [](const std::string& text, const std::string& weights) {
        Analysis a = analysis_of(text);
        return orbifold_presentation(a.sweep, a.meridians, WeightVector::parse(weights)).concrete();
      },
      py::arg("arrangement"), py::arg("weights"));
  m.def(
      "lac",
      [](const std::string& text, const std::vector<std::string>& points, const std::vector<std::string>& index) {
        Analysis a = analysis_of(text);
        return lac_group(lac_datum(a, points, index)).presentation;
      },
      py::arg("arrangement"), py::arg("points"), py::arg("index") = std::vector<std::string>{});
  m.def(
      "simplify",
      [](const Presentation& p, std::optional<std::size_t> budget) {
        return tietze_simplify(p, budget.value_or(default_budget(p)));
      },
      py::arg("presentation"), py::arg("budget") = py::none());
  m.def(
      "abelianize",
      [](const Presentation& p) {
        AbelianInvariants inv = abelianization(p);
        py::list torsion;
        for (const auto& d : inv.torsion) torsion.append(to_py_int(d));
        return py::make_tuple(inv.free_rank, torsion);
      },
      py::arg("presentation"), "(free rank, invariant factors)");
  m.def(
      "check_hom",
      [](const Presentation& p, const std::vector<std::vector<std::vector<py::int_>>>& images) {
        return verify_homomorphism(p, to_matrices(images)).pass;
      },
      py::arg("presentation"), py::arg("images"));
  m.def(
      "image",
      [](const Presentation& p, const std::string& word, const std::vector<std::vector<std::vector<py::int_>>>& images) {
        IntegerMatrix r = evaluate(parse_word(word, &p.names), to_matrices(images));
        py::list rows;
        for (std::size_t i = 0; i < r.rows(); ++i) {
          py::list row;
          for (std::size_t j = 0; j < r.cols(); ++j) row.append(to_py_int(r(i, j)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("presentation"), py::arg("word"), py::arg("images"));
  m.def(
      "infinite_order", [](const std::vector<std::vector<py::int_>>& mat) { return matrix_infinite_order(to_matrix(mat)); },
      py::arg("matrix"));
  m.def(
      "coset_index",
      [](const Presentation& p, std::size_t max_cosets, const std::vector<std::string>& subgroup) -> py::object {
        std::vector<Word> h;
        for (const auto& s : subgroup) h.push_back(parse_word(s, &p.names));
        CosetResult r = coset_enumeration(p, h, max_cosets);
        if (!r.closed) return py::none();
        return py::int_(r.index);
      },
      py::arg("presentation"), py::arg("max_cosets") = 100000, py::arg("subgroup") = std::vector<std::string>{},
      "Subgroup index, or None when the cap is reached");
  m.def("svg", [](const std::string& text) { return render_svg(prepare(parse_arrangement(text))); },
        py::arg("arrangement"));
}
