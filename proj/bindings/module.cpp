#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratcycle/enumeration.hpp"
#include "ratcycle/integrality.hpp"
#include "ratcycle/padic.hpp"

namespace py = pybind11;
using namespace ratcycle;

namespace {

py::int_ to_py(const Int& v) {
    PyObject* obj = PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

Int from_py(const py::int_& v) {
    return Int(py::str(static_cast<const py::object&>(v)).cast<std::string>());
}

py::object to_fraction(const Rational& r) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_py(r.num()), to_py(r.den()));
}

py::tuple witness_tuple(const Witness& w) {
    return py::make_tuple(to_py(w.alpha), to_py(w.beta), w.b);
}

py::dict solution_dict(const CycleSolution& sol) {
    py::list u, x;
    for (const Rational& r : sol.U) u.append(to_fraction(r));
    for (const Rational& r : sol.x) x.append(to_fraction(r));
    py::dict out;
    out["D"] = to_py(sol.D);
    out["U"] = u;
    out["x"] = x;
    out["common_den"] = to_py(sol.common_den);
    return out;
}

Witness witness_arg(const Composition& c, const py::int_& alpha, const py::int_& beta, long b) {
    return make_witness(c, from_py(alpha), from_py(beta), b);
}

}  // namespace

PYBIND11_MODULE(_ratcycle, m) {
    m.doc() = "exact rational cycles of generalized Collatz compositions";

    py::register_exception<ParseError>(m, "SpecParseError", PyExc_ValueError);
    py::register_exception<Error>(m, "DomainError", PyExc_ValueError);

    py::class_<Composition>(m, "Composition")
        .def(py::init([](const py::int_& q, const std::vector<std::pair<py::int_, py::int_>>& steps) {
                 std::vector<AffineStep> converted;
                 for (const auto& [p, k] : steps) converted.push_back({from_py(p), from_py(k)});
                 return Composition(from_py(q), std::move(converted));
             }),
             py::arg("q"), py::arg("steps"))
        .def_property_readonly("q", [](const Composition& c) { return to_py(c.q()); })
        .def_property_readonly("n", &Composition::size)
        .def_property_readonly("steps",
                               [](const Composition& c) {
                                   py::list out;
                                   for (const AffineStep& s : c.steps())
                                       out.append(py::make_tuple(to_py(s.p), to_py(s.k)));
                                   return out;
                               })
        .def("apply_step",
             [](const Composition& c, long i, const py::int_& num, const py::int_& den) {
                 return to_fraction(c.apply_step(i, Rational(from_py(num), from_py(den))));
             },
             py::arg("i"), py::arg("num"), py::arg("den") = py::int_(1))
        .def("p_product", [](const Composition& c, long i, long j) { return to_py(c.p_product(i, j)); })
        .def("sigma", [](const Composition& c, long i, long j) { return to_py(c.sigma(i, j)); })
        .def("rotate", &Composition::rotate)
        .def("power", &Composition::power)
        .def("render", &Composition::render)
        .def("__eq__", [](const Composition& a, const Composition& b) { return a == b; })
        .def("__repr__", [](const Composition& c) {
            return "<Composition q=" + c.q().get_str() + " n=" + std::to_string(c.size()) + ">";
        });

    m.def("parse_spec", &parse_spec, py::arg("text"));

    m.def("mod_inverse", [](const py::int_& a, const py::int_& mod) {
        return to_py(mod_inverse(from_py(a), from_py(mod)));
    });
    m.def("euler_totient", [](const py::int_& n) { return to_py(euler_totient(from_py(n))); });

    m.def("discriminant", [](const Composition& c) { return to_py(discriminant(c)); });
    m.def("solve_cycle", [](const Composition& c) { return solution_dict(solve_cycle(c)); });
    m.def("affine_fold_fixed_point",
          [](const Composition& c) { return to_fraction(affine_fold_fixed_point(c)); });

    m.def("is_witness", [](const Composition& c, const py::int_& alpha, const py::int_& beta,
                           long b) { return is_witness(c, from_py(alpha), from_py(beta), b); });
    m.def("search_witnesses",
          [](const Composition& c, const py::int_& alpha_bound, const py::int_& beta_bound) {
              py::list out;
              for (const Witness& w : search_witnesses(c, from_py(alpha_bound), from_py(beta_bound)))
                  out.append(witness_tuple(w));
              return out;
          });
    m.def("canonical_witness", [](const Composition& c, const py::int_& k) {
        return witness_tuple(canonical_witness(c, from_py(k)));
    });
    m.def("theorem_combination",
          [](const Composition& c, const py::int_& alpha, const py::int_& beta, long b, long i) {
              return to_py(theorem_combination(c, witness_arg(c, alpha, beta, b), i));
          });
    m.def("lemma1_transform",
          [](const Composition& c, const py::int_& alpha, const py::int_& beta, long b) {
              return witness_tuple(lemma1_transform(c, witness_arg(c, alpha, beta, b)));
          });
    m.def("lemma2_shift",
          [](const Composition& c, const py::int_& alpha, const py::int_& beta, long b, long i) {
              auto [first, second] = lemma2_shift(c, witness_arg(c, alpha, beta, b), i);
              return py::make_tuple(to_py(first), to_py(second));
          });
    m.def("decompose_m",
          [](const Composition& c, const py::int_& alpha, const py::int_& beta, long b, long i) {
              DecompositionReport r = decompose_m(c, witness_arg(c, alpha, beta, b), i);
              py::list mlist;
              for (const Int& mj : r.M) mlist.append(to_py(mj));
              py::dict out;
              out["M"] = mlist;
              out["combination"] = to_py(r.combination);
              return out;
          });
    m.def("remark_edge",
          [](const Composition& c, const py::int_& alpha, const py::int_& beta, long b) {
              py::list out;
              for (const Int& v : remark_edge(c, from_py(alpha), from_py(beta), b))
                  out.append(to_py(v));
              return out;
          });

    m.def("expand",
          [](const py::int_& num, const py::int_& den, const py::int_& base, long max_digits) {
              PAdicExpansion e = expand(Rational(from_py(num), from_py(den)), from_py(base),
                                        max_digits);
              py::list pre, per;
              for (const Int& d : e.preperiod) pre.append(to_py(d));
              for (const Int& d : e.period) per.append(to_py(d));
              py::dict out;
              out["base"] = to_py(e.base);
              out["preperiod"] = pre;
              out["period"] = per;
              return out;
          },
          py::arg("num"), py::arg("den"), py::arg("base"), py::arg("max_digits") = 100000);
    m.def("pattern_check", [](const Composition& c, long l, long i, long b) {
        PatternReport r = pattern_check(c, l, i, b);
        py::dict out;
        out["l"] = r.l;
        out["i"] = r.i;
        out["b"] = r.b;
        out["sigma"] = to_py(r.sigma_value);
        out["difference"] = to_py(r.difference);
        out["agreement"] =
            r.agreement == TailAgreement::tail_equal ? "tail-equal" : "tail-complement";
        return out;
    });
    m.def("render_table", [](const Composition& c, const py::int_& base, long digits) {
        return render_table(c, from_py(base), digits);
    });

    auto record_dict = [](const CycleRecord& rec) {
        py::dict out;
        out["word"] = rec.word;
        out["n"] = rec.n;
        out["m"] = rec.m;
        out["D"] = to_py(rec.D);
        out["x0"] = to_fraction(rec.x0);
        out["is_integer"] = rec.is_integer;
        out["rotation_class"] = rec.rotation_class;
        return out;
    };
    m.def("enumerate_words",
          [record_dict](long q, long p, long kS, long kT, long max_len) {
              py::list out;
              for (const CycleRecord& rec : enumerate_words(q, p, kS, kT, max_len))
                  out.append(record_dict(rec));
              return out;
          },
          py::arg("q"), py::arg("p"), py::arg("kS") = 1, py::arg("kT") = 0, py::arg("max_len") = 11);
    m.def("find_integer_cycles",
          [record_dict](long q, long p, long kS, long kT, long max_len, bool dedup_rotations) {
              py::list out;
              for (const CycleRecord& rec :
                   find_integer_cycles(q, p, kS, kT, max_len, dedup_rotations))
                  out.append(record_dict(rec));
              return out;
          },
          py::arg("q"), py::arg("p"), py::arg("kS") = 1, py::arg("kT") = 0, py::arg("max_len") = 11,
          py::arg("dedup_rotations") = false);
    m.def("classify_rotations", [](const std::string& word, long q, long p, long kS, long kT) {
        RotationClassification r = classify_rotations(word, q, p, kS, kT);
        py::list xs;
        for (const Rational& x : r.x) xs.append(to_fraction(x));
        py::dict out;
        out["canonical"] = r.canonical;
        out["x"] = xs;
        return out;
    },
          py::arg("word"), py::arg("q") = 2, py::arg("p") = 3, py::arg("kS") = 1, py::arg("kT") = 0);
}
