#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chainfib/bounds.hpp"
#include "chainfib/verify.hpp"

namespace py = pybind11;
using namespace chainfib;

namespace {

void translate(const error& e) {
  PyErr_SetString(PyExc_ValueError, e.what());
}

}  // namespace

PYBIND11_MODULE(_chainfib, m) {
  m.doc() = "Fibered-class arithmetic for the magic manifold and chained-link "
            "complements.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      translate(e);
    }
  });

  py::class_<SurfaceType>(m, "SurfaceType")
      .def(py::init<i64, i64>(), py::arg("genus"), py::arg("punctures"))
      .def_readonly("genus", &SurfaceType::genus)
      .def_readonly("punctures", &SurfaceType::punctures)
      .def("euler_characteristic", &SurfaceType::euler_characteristic)
      .def("__eq__", [](const SurfaceType& a, const SurfaceType& b) { return a == b; })
      .def("__repr__", &SurfaceType::name);

  py::class_<StretchFactor>(m, "StretchFactor")
      .def_readonly("trace_abs", &StretchFactor::trace_abs)
      .def_readonly("value", &StretchFactor::value)
      .def_readonly("has_exact", &StretchFactor::has_exact)
      .def_readonly("exact_p", &StretchFactor::exact_p)
      .def_readonly("exact_q", &StretchFactor::exact_q);

  m.def("gcd0", &gcd0, py::arg("a"), py::arg("b"));
  m.def("is_primitive", [](const std::vector<i64>& v) {
    return is_primitive(FiberClass(v));
  });
  m.def("surface_from", &surface_from, py::arg("norm"), py::arg("boundaries"));

  m.def("magic_in_cone",
        [](i64 x, i64 y, i64 z) { return magic_in_cone(MagicClass(x, y, z)); });
  m.def("magic_norm",
        [](i64 x, i64 y, i64 z) { return magic_norm(MagicClass(x, y, z)); });
  m.def("magic_boundaries",
        [](i64 x, i64 y, i64 z) { return magic_boundaries(MagicClass(x, y, z)); });
  m.def("magic_classify",
        [](i64 x, i64 y, i64 z) { return magic_classify(MagicClass(x, y, z)); });

  m.def("chain_in_cone",
        [](const std::vector<i64>& v) { return chain_in_cone(ChainClass(v)); });
  m.def("chain_norm",
        [](const std::vector<i64>& v) { return chain_norm(ChainClass(v)); });
  m.def("chain_boundaries",
        [](const std::vector<i64>& v) { return chain_boundaries(ChainClass(v)); });
  m.def("chain_classify",
        [](const std::vector<i64>& v) { return chain_classify(ChainClass(v)); });

  m.def("mu", [](const std::vector<std::vector<i64>>& rows) {
    return mu(IntersectionMatrix(rows));
  });
  m.def("classify_word", [](const std::string& word, double mu_value) {
    const WordType t = classify_word(parse_word(word), mu_value);
    py::dict out;
    out["kind"] = word_class_name(t.kind);
    if (t.kind == WordClass::hyperbolic) out["stretch"] = t.stretch;
    return out;
  });
  m.def("monodromy_stretch", &monodromy_stretch, py::arg("n"));

  m.def("magic_family", [](const std::string& id, i64 k) {
    const auto fid = magic_family_from_name(id);
    if (!fid) fail(errc::invalid_input, "unknown family id '" + id + "'");
    return magic_family(*fid, k).underlying().coords();
  });
  m.def("chain_sequence", [](i64 m_, i64 pad, i64 i) {
    return chain_sequence(SequenceIndex{m_, pad, i, 1}).coords();
  });
  m.def("chain_sequence_t", [](i64 m_, i64 pad, i64 i, i64 t) {
    return chain_sequence_t(SequenceIndex{m_, pad, i, t}).coords();
  });
  m.def("solve_target", [](i64 k, i64 g, i64 n) {
    return solve_target(k, g, n).coords();
  });

  m.def("chi_abs", &chi_abs, py::arg("g"), py::arg("n"));
  m.def("lower_bound",
        [](i64 k, i64 g, i64 n) { return lower_bound({k, g, n}); });
  m.def("upper_bound", [](i64 k, i64 g, i64 n) {
    const UpperBound u = upper_bound({k, g, n});
    return py::make_tuple(u.value, u.witness.coords());
  });
  m.def("corollary_bounds", [](i64 k, i64 g, i64 n) -> py::object {
    const auto v = corollary_bounds({k, g, n});
    if (!v) return py::none();
    return py::float_(*v);
  });
  m.def("normalized_entropy_cap", [](i64 m_, i64 pad, i64 i) {
    const EntropyCap c = normalized_entropy_cap(SequenceIndex{m_, pad, i, 1});
    return py::make_tuple(c.exact, c.cap);
  });

  m.def("run_all_checks", [] {
    py::list out;
    for (const CheckResult& r : run_all_checks())
      out.append(py::make_tuple(r.name, r.passed, r.detail));
    return out;
  });
}
