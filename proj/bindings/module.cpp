// Python bindings exposing the main operations.  Values cross the boundary
// as plain python types: surfaces and targets as small wrapper classes,
// index classes as tuples of ints, degrees as (ring, tuple) pairs, reports
// as JSON-derived dicts.

#include "totreal/json_io.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

namespace py = pybind11;
using namespace totreal;

namespace {

Modulus modulus_from(py::object q) {
    if (q.is_none()) return Modulus::infinity();
    return Modulus::finite(q.cast<long long>());
}

py::object modulus_to(const Modulus& q) {
    if (q.is_infinite()) return py::none();
    return py::int_(q.value());
}

IndexClass index_from(py::object q, const std::vector<long long>& coords) {
    Modulus m = modulus_from(std::move(q));
    IndexClass c{m, {}};
    for (long long v : coords) c.coords.emplace_back(m, v);
    return c;
}

py::tuple index_to(const IndexClass& c) {
    py::list vals;
    for (const CycElem& e : c.coords) vals.append(e.value_ll());
    return py::make_tuple(modulus_to(c.q), py::tuple(vals));
}

DegreeClass degree_from(const Target& t, const std::string& ring,
                        const std::vector<long long>& c) {
    return make_degree(t, ring == "Z" ? Ring::Z : Ring::Z2, c);
}

py::dict json_to_dict(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "classification of totally real immersions of closed surfaces";

    py::class_<Surface>(mod, "Surface")
        .def(py::init(&make_surface), py::arg("orientable"), py::arg("genus"))
        .def_readonly("orientable", &Surface::orientable)
        .def_readonly("genus", &Surface::genus)
        .def("__eq__", [](const Surface& a, const Surface& b) { return a == b; })
        .def("__repr__", [](const Surface& s) {
            return "Surface(orientable=" + std::string(s.orientable ? "True" : "False") +
                   ", genus=" + std::to_string(s.genus) + ")";
        });

    py::class_<Target>(mod, "Target")
        .def_static("C2", [] { return make_target(TargetKind::C2); })
        .def_static("CP2", [] { return make_target(TargetKind::CP2); })
        .def_static("CP1xCP1", [] { return make_target(TargetKind::CP1xCP1); })
        .def_static("CP2Blowup", [](int m) { return make_target(TargetKind::CP2Blowup, m); },
                    py::arg("m"))
        .def_property_readonly("m", [](const Target& t) { return t.m; })
        .def("__repr__", [](const Target& t) {
            switch (t.kind) {
                case TargetKind::C2: return std::string("Target.C2()");
                case TargetKind::CP2: return std::string("Target.CP2()");
                case TargetKind::CP1xCP1: return std::string("Target.CP1xCP1()");
                case TargetKind::CP2Blowup:
                    return "Target.CP2Blowup(" + std::to_string(t.m) + ")";
            }
            return std::string("Target()");
        });

    mod.def("euler_char", &euler_char, py::arg("surface"));
    mod.def("surface_params", [](const Surface& s) {
        SurfaceParams p = params(s);
        return py::make_tuple(p.epsilon, p.sign);
    });
    mod.def("connected_sum", &connected_sum);

    mod.def("iq_cardinality", [](const Surface& s, py::object q) {
        IqDescriptor d = iq_set(s, modulus_from(std::move(q)));
        if (d.empty()) return static_cast<long long>(0);
        if (!d.finite()) throw std::invalid_argument("index set is infinite");
        return d.cardinality().convert_to<long long>();
    });
    mod.def("iq_is_empty", [](const Surface& s, py::object q) {
        return iq_set(s, modulus_from(std::move(q))).empty();
    });
    mod.def("iq_enumerate", [](const Surface& s, long long q) {
        py::list out;
        for (const IndexClass& c : iq_enumerate(s, Modulus::finite(q))) {
            py::list coords;
            for (const CycElem& e : c.coords) coords.append(e.value_ll());
            out.append(py::tuple(coords));
        }
        return out;
    });
    mod.def("iq_contains", [](const Surface& s, py::object q, const std::vector<long long>& coords) {
        Modulus m = modulus_from(std::move(q));
        return iq_set(s, m).contains(index_from(modulus_to(m), coords));
    });
    mod.def("modq_reduction_surjective", [](const Surface& s, long long q) {
        return modq_reduction_image(s, Modulus::finite(q)).surjective;
    });

    mod.def("q_of", [](const Target& t) { return modulus_to(q_of(t)); });
    mod.def("intersection",
            [](const Target& t, const std::string& ring, const std::vector<long long>& x,
               const std::vector<long long>& y) {
                return intersection(t, degree_from(t, ring, x), degree_from(t, ring, y));
            });
    mod.def("c1_eval", [](const Target& t, const std::vector<long long>& x) {
        return c1_eval(t, degree_from(t, "Z", x));
    });
    mod.def("w2_eval", [](const Target& t, const std::vector<long long>& x) {
        return w2_eval(t, degree_from(t, "Z2", x));
    });
    mod.def("pontryagin_square", [](const Target& t, const std::vector<long long>& x) {
        return pontryagin_square(t, degree_from(t, "Z2", x));
    });
    mod.def("ker_c1_mod2", [](const Target& t, const std::vector<long long>& x) {
        return ker_c1_mod2(t, degree_from(t, "Z2", x));
    });
    mod.def("d_set_contains",
            [](const Target& t, const Surface& s, const std::string& ring,
               const std::vector<long long>& x) {
                return d_set_contains(t, s, degree_from(t, ring, x));
            });

    mod.def("immersion_exists", [](const Surface& s, const Target& t) {
        Existence e = immersion_exists(s, t);
        return py::make_tuple(decision_name(e.value), e.reason);
    });
    mod.def("embedding_exists", [](const Surface& s, const Target& t) {
        Existence e = embedding_exists(s, t);
        return py::make_tuple(decision_name(e.value), e.reason);
    });
    mod.def("z_set", [](const Surface& s, const Target& t) {
        return json_to_dict(to_json(z_set(s, t)));
    });
    mod.def("z_set_pairs", [](const Surface& s, const Target& t) {
        ZSet z = z_set(s, t);
        if (!z.finite) throw std::invalid_argument("z-set is infinite; use z_set()");
        py::list out;
        for (const IndexDegreePair& p : z.pairs) {
            py::list coords;
            for (const CycElem& e : p.index.coords) coords.append(e.value_ll());
            out.append(py::make_tuple(py::tuple(coords), py::tuple(py::cast(p.degree.c))));
        }
        return out;
    });
    mod.def("embedding_admissible",
            [](const Surface& s, const Target& t, const std::vector<long long>& index,
               const std::string& ring, const std::vector<long long>& degree) {
                IndexDegreePair p{index_from(modulus_to(q_of(t)), index),
                                  degree_from(t, ring, degree)};
                return embedding_admissible(s, t, p);
            });
    mod.def("realized_by_embedding",
            [](const Surface& s, const Target& t, const std::vector<long long>& index,
               const std::string& ring, const std::vector<long long>& degree) {
                IndexDegreePair p{index_from(modulus_to(q_of(t)), index),
                                  degree_from(t, ring, degree)};
                Existence e = realized_by_embedding(s, t, p);
                return py::make_tuple(decision_name(e.value), e.reason);
            });
    mod.def("total_mod2_degree", [](const Target& t, const std::vector<long long>& x) {
        TotalMod2Degree d = total_mod2_degree(t, degree_from(t, "Z2", x));
        return py::make_tuple(d.d, d.s);
    });
    mod.def("dvf_check", [](const Surface& s, int d, int cnt) {
        return dvf_check(s, TotalMod2Degree{d, cnt});
    });
    mod.def("bdm_step", [](int m, const Surface& s, int d, int cnt) {
        BdmState st = bdm_step(BdmState{m, s, TotalMod2Degree{d, cnt}});
        return py::make_tuple(st.m, st.surface, st.tmd.d, st.tmd.s);
    });
    mod.def("table1", [] { return json_to_dict(to_json(table1())); });
    mod.def("table2", [] { return json_to_dict(to_json(table2())); });
    mod.def("classify_report", [](const Surface& s, const Target& t) {
        return json_to_dict(classify_report(s, t));
    });

    mod.def("is_solution", [](int m, long long chi, long long d, const std::vector<long long>& q) {
        return is_solution(make_instance(m, chi), d, q);
    });
    mod.def("canonicalize", [](long long d, const std::vector<long long>& q) {
        DiophSolution c = canonicalize(make_solution(d, q));
        return py::make_tuple(c.d, py::tuple(py::cast(c.q)));
    });
    mod.def("solve_all", [](int m, long long chi, long long dmin, long long dmax) {
        py::list out;
        for (const DiophSolution& s : solve_all(make_instance(m, chi), dmin, dmax))
            out.append(py::make_tuple(s.d, py::tuple(py::cast(s.q))));
        return out;
    });
    mod.def("ppsss_formula", [](long long d) {
        DiophSolution s = ppsss_formula(d);
        return py::make_tuple(s.d, py::tuple(py::cast(s.q)));
    });
    mod.def("trivial_modifications", [](long long d, const std::vector<long long>& q, int m) {
        py::list out;
        for (const DiophSolution& s : trivial_modifications(make_solution(d, q), m))
            out.append(py::make_tuple(s.d, py::tuple(py::cast(s.q))));
        return out;
    });

    mod.def("jacobian", [](int k, int l, double a, double t, double s) {
        return jacobian(ImmersionSpec{make_family(k, l, a)}, t, s);
    });
    mod.def("total_reality_check", [](int k, int l, double a, int grid) {
        RealityReport r = total_reality_check(ImmersionSpec{make_family(k, l, a)}, grid);
        return py::make_tuple(r.totally_real, r.min_abs_j);
    }, py::arg("k"), py::arg("l"), py::arg("a"), py::arg("grid") = 256);
    mod.def("maslov_index", [](int k, int l, double a, const std::string& mode, int grid) {
        SurfaceMode sm = mode == "klein" ? SurfaceMode::Klein : SurfaceMode::Torus;
        MaslovResult r = maslov_index(ImmersionSpec{make_family(k, l, a)}, sm, grid);
        return py::make_tuple(r.index.coords[0].value_ll(), r.index.coords[1].value_ll());
    }, py::arg("k"), py::arg("l"), py::arg("a") = 10.0, py::arg("mode") = "torus",
       py::arg("grid") = 256);
    mod.def("winding_number", [](const std::vector<std::complex<double>>& loop) {
        WindingResult w = winding_number(loop);
        return py::make_tuple(w.n, w.residual);
    });
    mod.def("sl2_realizer", [](long long p, long long r) {
        Sl2Matrix m = sl2_realizer(p, r);
        return py::make_tuple(py::make_tuple(m.a, m.b), py::make_tuple(m.c, m.d));
    });
}
