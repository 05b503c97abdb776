// Python bindings for the core operations. Weights cross the boundary as
// tuples of ints, exact integers as Python ints and rationals as
// fractions.Fraction. Simple-root and wall indices are 0-based here, as in C++.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "stlab/borelring.hpp"
#include "stlab/charring.hpp"
#include "stlab/cohomology.hpp"
#include "stlab/errors.hpp"
#include "stlab/frobp1.hpp"
#include "stlab/suite.hpp"

namespace py = pybind11;
using namespace stlab;

namespace {

py::int_ to_py(const mpz_class& z) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_py(const mpq_class& q) {
  static const py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(q.get_num()), to_py(q.get_den()));
}

py::tuple to_py(const Weight& w) {
  py::tuple t(w.rank());
  for (std::size_t i = 0; i < w.rank(); ++i) t[i] = py::int_(w[i]);
  return t;
}

Weight to_weight(const std::vector<std::int64_t>& coords) { return Weight(coords); }

py::dict to_py(const Character& ch) {
  py::dict d;
  for (const auto& [w, c] : ch.terms()) d[to_py(w)] = to_py(c);
  return d;
}

Character to_character(std::size_t rank, const py::dict& d) {
  Character ch(rank);
  for (const auto& [key, value] : d) {
    auto w = to_weight(key.cast<std::vector<std::int64_t>>());
    if (w.rank() != rank) throw ValidationError("character weight has the wrong rank");
    ch.add_term(w, mpz_class(py::str(value).cast<std::string>()));
  }
  return ch;
}

RootSystem make_root_system(const std::string& name) { return RootSystem(RootSystemSpec::parse(name)); }

py::object bott(const RootSystem& rs, const std::vector<std::int64_t>& chi) {
  const auto r = bott_cohomology(rs, to_weight(chi));
  if (r.is_zero()) return py::none();
  py::dict d;
  d["degree"] = *r.degree;
  d["dimension"] = to_py(*r.dimension);
  d["highest_weight"] = to_py(*r.highest_weight);
  d["weyl_word"] = r.weyl_element->word;
  return d;
}

py::dict orthogonality(const RootSystem& rs, const std::vector<std::int64_t>& chi, std::uint64_t p, std::uint64_t n,
                       std::optional<std::size_t> wall) {
  const PrimePower pp(p, n);
  const auto r = wall ? orthogonality_check(rs, to_weight(chi), pp, *wall) : orthogonality_check(rs, to_weight(chi), pp);
  py::dict d;
  d["wall"] = r.wall_index;
  d["mu"] = to_py(r.mu);
  d["acyclic"] = r.acyclic_predicate;
  d["euler_zero"] = r.euler_is_zero;
  d["passed"] = r.passed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Steinberg-module and Frobenius-pushforward computations.";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init(&make_root_system), py::arg("name"), "Root system by name, e.g. 'B2'.")
      .def(py::init([](char family, std::size_t rank) { return RootSystem(RootSystemSpec{family, rank}); }),
           py::arg("family"), py::arg("rank"))
      .def_property_readonly("name", [](const RootSystem& rs) { return rs.spec().name(); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("cartan", &RootSystem::cartan)
      .def_property_readonly("num_positive", &RootSystem::num_positive)
      .def_property_readonly("weyl_group_order", &RootSystem::weyl_group_order)
      .def_property_readonly("rho", [](const RootSystem& rs) { return to_py(rs.rho()); })
      .def("positive_roots",
           [](const RootSystem& rs) {
             py::list out;
             for (const auto& r : rs.positive_roots()) out.append(py::make_tuple(r.simple_coords, to_py(r.weight)));
             return out;
           },
           "List of (simple-root coordinates, fundamental-weight coordinates).")
      .def("__repr__", [](const RootSystem& rs) { return "RootSystem('" + rs.spec().name() + "')"; });

  m.def("weyl_dimension", [](const RootSystem& rs, const std::vector<std::int64_t>& l) {
    return to_py(weyl_dimension(rs, to_weight(l)));
  });
  m.def("weyl_character", [](const RootSystem& rs, const std::vector<std::int64_t>& l) {
    return to_py(weyl_character(rs, to_weight(l)));
  });
  m.def("euler_character", [](const RootSystem& rs, const std::vector<std::int64_t>& l) {
    return to_py(euler_character(rs, to_weight(l)));
  });
  m.def("steinberg_character",
        [](const RootSystem& rs, std::uint64_t p, std::uint64_t n) { return to_py(steinberg_character(rs, PrimePower(p, n))); },
        py::arg("rs"), py::arg("p"), py::arg("n") = 1);
  m.def("demazure", [](const RootSystem& rs, const Word& word, const py::dict& f) {
    return to_py(demazure_word(rs, word, to_character(rs.rank(), f)));
  }, py::arg("rs"), py::arg("word"), py::arg("character"), "Apply D_word; word[0] acts first.");
  m.def("longest_word", [](const RootSystem& rs) { return longest_element(rs).word; });
  m.def("kempf_identity", [](const RootSystem& rs, const std::vector<std::int64_t>& l, std::int64_t q) {
    return kempf_identity_check(rs, to_weight(l), q);
  });

  m.def("bott_cohomology", &bott, py::arg("rs"), py::arg("chi"),
        "None if the cohomology vanishes, else degree, dimension and highest weight.");
  m.def("is_acyclic_over_Z", [](const RootSystem& rs, const std::vector<std::int64_t>& chi) {
    return is_acyclic_over_Z(rs, to_weight(chi));
  });
  m.def("orthogonality_check", &orthogonality, py::arg("rs"), py::arg("chi"), py::arg("p"), py::arg("n") = 1,
        py::arg("wall") = py::none());

  m.def("hirzebruch_riemann_roch", [](const RootSystem& rs, const std::vector<std::int64_t>& l) {
    return to_py(SchubertCalculus(rs).hirzebruch_riemann_roch(to_weight(l)));
  });
  m.def("verify_steinberg_grr", [](const RootSystem& rs, std::uint64_t p, std::uint64_t n) {
    return verify_steinberg_grr(rs, PrimePower(p, n));
  }, py::arg("rs"), py::arg("p"), py::arg("n") = 1);

  m.def("p1_pushforward", [](std::int64_t d, std::int64_t q) { return split_frobenius_pushforward(d, q).degrees; },
        py::arg("d"), py::arg("q"), "Degrees of the line bundles in F_* O(d), descending.");
  m.def("p1_closed_formula", [](std::int64_t d, std::int64_t q) { return closed_formula(d, q).degrees; });
  m.def("verify_steinberg_p1", [](std::uint64_t p, std::uint64_t n) { return verify_steinberg_p1(PrimePower(p, n)); },
        py::arg("p"), py::arg("n") = 1);

  m.def("verify_all_json", [](std::optional<std::string> config, unsigned jobs) {
    const auto cfg = resolve_config(config);
    py::gil_scoped_release release;
    return verify_all(cfg, jobs).to_json(cfg).dump(2);
  }, py::arg("config") = py::none(), py::arg("jobs") = 1);
}
