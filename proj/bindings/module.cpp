#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wtorsor/json_io.hpp"

namespace py = pybind11;
using namespace wtorsor;

namespace {

Rational rational_from_py(const py::handle& v) {
    if (py::isinstance<py::int_>(v)) return Rational(BigInt(py::str(v).cast<std::string>()));
    if (py::isinstance<py::str>(v)) return parse_rational(v.cast<std::string>());
    throw InvalidInputError("weights must be ints or 'a/b' strings");
}

WeightedGroup weighted_from_py(const std::vector<long>& factors, const py::sequence& weights) {
    std::vector<Rational> w;
    w.reserve(weights.size());
    for (const auto& v : weights) w.push_back(rational_from_py(v));
    return WeightedGroup(make_group(factors), std::move(w));
}

std::vector<std::string> weights_to_py(const WeightedGroup& w) {
    std::vector<std::string> out;
    out.reserve(w.weights.size());
    for (const auto& x : w.weights) out.push_back(to_string(x));
    return out;
}

py::object t_iso_to_py(const std::optional<TIsoWitness>& witness) {
    if (!witness) return py::none();
    return py::make_tuple(witness->iso.generator_images, witness->twist.exps);
}

py::object affine_to_py(const std::optional<AffineWitness>& witness) {
    if (!witness) return py::none();
    return py::make_tuple(witness->iso.generator_images, witness->translation.coords);
}

py::list ms_to_py(const MSMultiset& ms) {
    py::list out;
    for (const auto& entry : ms.entries) {
        py::dict cls;
        cls["subgroup_order"] = entry.cls.rep.group.order();
        cls["group"] = entry.cls.rep.group.invariant_factors();
        cls["multiplicity"] = entry.multiplicity;
        py::list values;
        for (const auto& v : entry.cls.rep.values) values.append(v);
        cls["weights"] = values;
        out.append(cls);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Fourier analysis of weighted finite abelian groups";

    // Translators run newest-first, so the subclasses registered below take
    // precedence over this catch-all.
    static py::exception<Error> base_error(m, "WtorsorError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(base_error.ptr(), e.what());
        }
    });
    py::register_exception<InvalidInputError>(m, "InvalidInputError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    py::class_<Cyclotomic>(m, "Cyclotomic")
        .def(py::init([](const std::string& r) { return Cyclotomic(parse_rational(r)); }))
        .def(py::init([](long long v) { return Cyclotomic(Rational(v)); }))
        .def_property_readonly("conductor", &Cyclotomic::conductor)
        .def_property_readonly("coeffs",
                               [](const Cyclotomic& c) {
                                   std::vector<std::string> out;
                                   for (const auto& x : c.coeffs()) out.push_back(to_string(x));
                                   return out;
                               })
        .def("is_zero", &Cyclotomic::is_zero)
        .def("is_rational", &Cyclotomic::is_rational)
        .def("rational_part", [](const Cyclotomic& c) { return to_string(c.rational_part()); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__repr__", [](const Cyclotomic& c) { return cyclotomic_to_json(c).dump(); });

    m.def("root_of_unity", &root_of_unity, py::arg("n"), py::arg("k"),
          "zeta_n^k as an exact cyclotomic number");
    m.def("cyclotomic_polynomial", [](long n) {
        const RatPoly phi = cyclotomic_polynomial(n);
        std::vector<std::string> out;
        for (const auto& c : phi.coeffs()) out.push_back(to_string(c));
        return out;
    });

    py::class_<FiniteAbelianGroup>(m, "Group")
        .def(py::init([](const std::vector<long>& factors) { return make_group(factors); }))
        .def_property_readonly("invariant_factors", &FiniteAbelianGroup::invariant_factors)
        .def_property_readonly("order", &FiniteAbelianGroup::order)
        .def_property_readonly("exponent", &FiniteAbelianGroup::exponent)
        .def("elements",
             [](const FiniteAbelianGroup& g) {
                 std::vector<std::vector<long>> out;
                 for (const auto& e : g.elements()) out.push_back(e.coords);
                 return out;
             })
        .def("characters",
             [](const FiniteAbelianGroup& g) {
                 std::vector<std::vector<long>> out;
                 for (const auto& c : g.characters()) out.push_back(c.exps);
                 return out;
             })
        .def("__eq__", [](const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) { return a == b; })
        .def("__repr__", [](const FiniteAbelianGroup& g) {
            return json(g.invariant_factors()).dump();
        });

    m.def("all_subgroups",
          [](const FiniteAbelianGroup& g, long long bound) {
              std::vector<std::vector<std::size_t>> out;
              for (const auto& s : all_subgroups(g, bound)) out.push_back(s.elements);
              return out;
          },
          py::arg("group"), py::arg("bound") = kDefaultEnumBound,
          "element-index sets of all subgroups");

    py::class_<WeightedGroup>(m, "WeightedGroup")
        .def(py::init(&weighted_from_py), py::arg("factors"), py::arg("weights"))
        .def_property_readonly("group", [](const WeightedGroup& w) { return w.group; })
        .def_property_readonly("weights", &weights_to_py)
        .def("__eq__", [](const WeightedGroup& a, const WeightedGroup& b) {
            return a.group == b.group && a.weights == b.weights;
        })
        .def("__repr__", [](const WeightedGroup& w) { return weighted_group_to_json(w).dump(); });

    py::class_<DualWeights>(m, "DualWeights")
        .def_property_readonly("group", [](const DualWeights& d) { return d.group; })
        .def_property_readonly("values", [](const DualWeights& d) { return d.values; })
        .def_property_readonly("conductor", &DualWeights::conductor)
        .def("__repr__", [](const DualWeights& d) { return dual_weights_to_json(d).dump(); });

    m.def("fourier_transform", &fourier_transform);
    m.def("inverse_fourier", &inverse_fourier);
    m.def("reduce", &wtorsor::reduce);
    m.def("is_reduced", &is_reduced);
    m.def("direct_sum",
          [](const WeightedGroup& a, const WeightedGroup& b) { return direct_sum(a, b).sum; });
    m.def("t_isomorphic",
          [](const DualWeights& a, const DualWeights& b, long long bound) {
              return t_iso_to_py(t_isomorphic(a, b, bound));
          },
          py::arg("d"), py::arg("d2"), py::arg("bound") = kDefaultEnumBound,
          "(generator_images, twist_exponents) of the first witness, or None");
    m.def("affine_isomorphic",
          [](const WeightedGroup& a, const WeightedGroup& b, long long bound) {
              return affine_to_py(affine_isomorphic(a, b, bound));
          },
          py::arg("w"), py::arg("w2"), py::arg("bound") = kDefaultEnumBound,
          "(generator_images, translation_coords) of the first witness, or None");

    m.def("has_nonvanishing", &has_nonvanishing);
    m.def("ms_multiset",
          [](const WeightedGroup& w, long long bound) { return ms_to_py(ms_multiset(w, bound)); },
          py::arg("w"), py::arg("bound") = kDefaultEnumBound);
    m.def("c_count", &c_count, py::arg("reference"), py::arg("target"),
          py::arg("bound") = kDefaultEnumBound);
    m.def("recover_decomposition", &recover_decomposition, py::arg("target"),
          py::arg("candidates"), py::arg("bound") = kDefaultEnumBound);

    m.def("lens_torsion_dual", [](long p, long q) { return lens_torsion_dual(LensSpace(p, q)); });
    m.def("lens_reduced_d", [](long p, long q) { return lens_reduced_d(LensSpace(p, q)); });
    m.def("lens_f", [](long p, long q) { return lens_f(LensSpace(p, q)); });
    m.def("oriented_diffeomorphic", [](long p, long q, long r, long s) {
        return oriented_diffeomorphic(LensSpace(p, q), LensSpace(r, s));
    });
    m.def("classify_lens_family",
          [](long p_max, long long bound) {
              std::vector<std::vector<std::pair<long, long>>> out;
              for (const auto& cls : classify_lens_family(p_max, bound)) {
                  std::vector<std::pair<long, long>> one;
                  for (const auto& l : cls) one.emplace_back(l.p, l.q);
                  out.push_back(std::move(one));
              }
              return out;
          },
          py::arg("p_max"), py::arg("bound") = kDefaultEnumBound);

    m.def("torus_delta", [](long p, long q) {
        const AlexanderPolynomial delta = torus_delta(p, q);
        std::vector<std::string> out;
        for (const auto& c : delta.poly().coeffs()) out.push_back(to_string(c));
        return out;
    });
    m.def("divides_delta", [](const std::vector<long long>& coeffs, long p, long q) {
        return divides_delta(AlexanderPolynomial::from_ints(coeffs), p, q);
    });
    m.def("surgery_torsion_dual", [](const std::vector<long long>& coeffs, long n) {
        return surgery_torsion_dual(AlexanderPolynomial::from_ints(coeffs), n);
    });
    m.def("reducible_surgery_obstruction",
          [](const std::vector<long long>& coeffs, long p, long q) {
              return reducible_surgery_obstruction(AlexanderPolynomial::from_ints(coeffs), p, q);
          });
}
