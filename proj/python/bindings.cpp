#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathmonoid/endomorphisms.hpp"
#include "pathmonoid/generators.hpp"
#include "pathmonoid/transformation.hpp"

namespace py = pybind11;

namespace pathmonoid {

namespace {

  // Python ints are arbitrary precision; go through the decimal string.
  py::int_ to_python(BigInt const& value) {
    return py::int_(py::str(value.str()));
  }

  std::vector<point_type> images_of(Transformation const& f) {
    return {f.images().begin(), f.images().end()};
  }

  py::dict as_dict(ClassificationReport const& r) {
    py::dict d;
    d["end"]        = r.is_end;
    d["wend"]       = r.is_wend;
    d["send"]       = r.is_send;
    d["swend"]      = r.is_swend;
    d["aut"]        = r.is_aut;
    d["idempotent"] = r.is_idempotent;
    d["regular"]    = r.is_regular;
    d["rank"]       = r.rank;
    d["image_min"]  = r.image_min;
    d["image_max"]  = r.image_max;
    return d;
  }

  py::dict as_dict(RankCertificate const& c) {
    py::dict d;
    d["n"]                               = c.degree;
    d["generating_set_size"]             = c.generating_set_size;
    d["distinct_rank_n_minus_1_kernels"] = c.distinct_rank_n_minus_1_kernels;
    d["closure_size"]                    = to_python(c.closure_size);
    d["expected_size"]                   = to_python(c.expected_size);
    d["identity_unique_of_rank_n"]       = c.identity_unique_of_rank_n;
    d["verdict"]                         = c.verdict;
    return d;
  }

}  // namespace

}  // namespace pathmonoid

PYBIND11_MODULE(_core, m) {
  using namespace pathmonoid;
  m.doc() = "Endomorphism monoids of the finite directed path";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Transformation>(m, "Transformation")
      .def(py::init<std::vector<point_type>>(), py::arg("images"))
      .def_property_readonly("n", &Transformation::degree)
      .def_property_readonly("images", &images_of)
      .def("__call__", &Transformation::at, py::arg("x"))
      .def("__len__", &Transformation::degree)
      .def("__mul__", &compose)
      .def("__eq__", [](Transformation const& a, Transformation const& b) {
        return a == b;
      })
      .def("__lt__", [](Transformation const& a, Transformation const& b) {
        return a < b;
      })
      .def("__hash__",
           [](Transformation const& f) {
             return std::hash<Transformation>{}(f);
           })
      .def("__str__", [](Transformation const& f) { return to_string(f); })
      .def("__repr__", [](Transformation const& f) {
        return "Transformation(" + to_string(f) + ")";
      });

  m.def("identity", &identity, py::arg("n"));
  m.def("compose", &compose, py::arg("f"), py::arg("g"),
        "x -> (x f) g");
  m.def("parse", &parse_transformation, py::arg("text"));
  m.def("format", [](Transformation const& f) { return to_string(f); },
        py::arg("f"));
  m.def("image_set", &image_set, py::arg("f"));
  m.def("kernel", [](Transformation const& f) { return kernel(f).blocks; },
        py::arg("f"));
  m.def("rank", &rank_of, py::arg("f"));
  m.def("is_order_preserving", &is_order_preserving, py::arg("f"));

  m.def("is_weak_endomorphism", &is_weak_endomorphism, py::arg("f"));
  m.def("is_weak_endomorphism_by_characterization",
        &is_weak_endomorphism_by_characterization, py::arg("f"));
  m.def("is_endomorphism", &is_endomorphism, py::arg("f"));
  m.def("is_strong_endomorphism", &is_strong_endomorphism, py::arg("f"));
  m.def("is_strong_weak_endomorphism", &is_strong_weak_endomorphism,
        py::arg("f"));
  m.def("is_automorphism", &is_automorphism, py::arg("f"));

  m.def(
      "encode",
      [](Transformation const& f) {
        auto const e = encode(f);
        return py::make_tuple(e.offset, e.composition);
      },
      py::arg("f"), "(offset j, composition) of a weak endomorphism");
  m.def(
      "decode",
      [](std::size_t n, std::size_t offset, std::vector<std::size_t> parts) {
        return decode(WEndEncoding{n, offset, std::move(parts)});
      },
      py::arg("n"), py::arg("offset"), py::arg("composition"));
  m.def("enumerate_wend", &enumerate_wend, py::arg("n"));
  m.def("count_wend", [](std::size_t n) { return to_python(count_wend(n)); },
        py::arg("n"));
  m.def(
      "count_idempotents",
      [](std::size_t n) { return to_python(count_idempotents(n)); },
      py::arg("n"));
  m.def("is_idempotent", &is_idempotent, py::arg("f"));
  m.def("is_regular", &is_regular, py::arg("f"));
  m.def("pseudo_inverse", &pseudo_inverse, py::arg("f"));
  m.def("classify", [](Transformation const& f) { return as_dict(classify(f)); },
        py::arg("f"));

  m.def("make_alpha", &make_alpha, py::arg("n"), py::arg("i"));
  m.def("make_beta", &make_beta, py::arg("n"), py::arg("i"));
  m.def("canonical_generators", &canonical_generators, py::arg("n"));
  m.def("split", &split, py::arg("f"));
  m.def(
      "factorize",
      [](Transformation const& f) { return to_string(factorize(f)); },
      py::arg("f"), "Word over a1..a(n-2), b(n-1), e.g. \"b2 a1\"");
  m.def(
      "evaluate",
      [](std::string const& word, std::size_t n) {
        return evaluate(parse_word(word, n));
      },
      py::arg("word"), py::arg("n"));
  m.def("closure", &closure, py::arg("n"), py::arg("gens"));
  m.def(
      "kernel_lower_bound",
      [](std::size_t n) { return as_dict(kernel_lower_bound(n)); },
      py::arg("n"));
}
