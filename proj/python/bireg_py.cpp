#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bireg/cli.hpp"
#include "bireg/errors.hpp"
#include "bireg/io.hpp"
#include "bireg/sheaf.hpp"
#include "bireg/verify.hpp"

namespace py = pybind11;
using namespace bireg;

namespace {

struct PyModule {
    InputDocument doc;
    BigradedModule M;

    PyModule(InputDocument d, int nu_max) : doc(std::move(d)), M(doc.module, nu_max) {}
};

py::dict verdict_dict(const RegularityVerdict& v) {
    py::dict d;
    d["value"] = v.value;
    d["decided"] = v.decided;
    d["method"] = to_string(v.method);
    py::list w;
    for (const auto& x : v.witnesses) w.append(py::make_tuple(x.i, py::make_tuple(x.at.a, x.at.b), x.dim));
    d["witnesses"] = w;
    d["diagnostics"] = v.diagnostics;
    return d;
}

py::dict lc_dict(const LocalCohomologyValue& v) {
    py::dict d;
    d["dim"] = v.dim;
    d["certified"] = v.certified;
    d["stabilized_at"] = v.stabilized_at;
    d["diagnostics"] = v.diagnostics;
    return d;
}

Window window_of(const std::tuple<int, int, int, int>& w) {
    return {std::get<0>(w), std::get<1>(w), std::get<2>(w), std::get<3>(w)};
}

HypothesisVariant variant_of(const std::string& s) {
    if (s == "definition") return HypothesisVariant::DefinitionOnly;
    if (s == "theorem") return HypothesisVariant::TheoremThreeFiveThree;
    throw InvalidIndex("variant must be 'definition' or 'theorem'");
}

} // namespace

PYBIND11_MODULE(bireg, m) {
    m.doc() = "Bigraded Castelnuovo-Mumford regularity toolkit";

    auto base = py::register_exception<Error>(m, "BiregError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<NotBihomogeneous>(m, "NotBihomogeneous", base.ptr());
    py::register_exception<InvalidIndex>(m, "InvalidIndex", base.ptr());
    py::register_exception<NoStabilization>(m, "NoStabilization", base.ptr());

    py::class_<PyModule>(m, "Module")
        .def(py::init([](const std::string& text, int nu_max) { return new PyModule(parse_input(text), nu_max); }),
             py::arg("text"), py::arg("nu_max") = 8)
        .def_property_readonly("m", [](const PyModule& s) { return s.doc.ring.m(); })
        .def_property_readonly("n", [](const PyModule& s) { return s.doc.ring.n(); })
        .def_property_readonly("kind", [](const PyModule& s) { return s.doc.kind; })
        .def("dim", [](const PyModule& s, int k, int kp) { return s.M.quotient().dim({k, kp}); })
        .def("betti",
             [](const PyModule& s) {
                 std::map<int, std::vector<std::tuple<int, int, int>>> out;
                 for (const auto& [d, row] : s.M.betti().rows())
                     for (const auto& [e, mult] : row) out[d].emplace_back(e.a, e.b, mult);
                 return out;
             })
        .def("betti_json", [](const PyModule& s) { return betti_json(s.M.betti()).dump(); })
        .def("frontier",
             [](const PyModule& s) {
                 std::vector<std::pair<int, int>> out;
                 for (Bidegree q : strong_regularity_frontier(s.M).minimal_points) out.emplace_back(q.a, q.b);
                 return out;
             })
        .def("strong", [](const PyModule& s, int p, int pp) { return verdict_dict(strong_regularity_check(s.M, p, pp)); })
        .def("weak",
             [](const PyModule& s, int p, int pp, const std::string& variant) {
                 return verdict_dict(weak_regularity_check(s.M, p, pp, variant_of(variant)));
             },
             py::arg("p"), py::arg("pp"), py::arg("variant") = "theorem")
        .def("lc",
             [](const PyModule& s, const std::string& kind, int i, int k, int kp) {
                 return lc_dict(s.M.local_cohomology(ideal_kind_from_string(kind), i, {k, kp}));
             },
             py::arg("ideal"), py::arg("i"), py::arg("k"), py::arg("kp"))
        .def("lc_table",
             [](const PyModule& s, const std::string& kind, int i, const std::tuple<int, int, int, int>& w) {
                 const LcGrid g = lc_table(s.M, ideal_kind_from_string(kind), i, window_of(w));
                 std::vector<std::vector<long long>> dims;
                 for (const auto& row : g.cells) {
                     dims.emplace_back();
                     for (const auto& c : row) dims.back().push_back(c.dim);
                 }
                 return py::make_tuple(dims, g.all_certified());
             })
        .def("mult",
             [](const PyModule& s, std::pair<int, int> from, std::pair<int, int> step) {
                 return multiplication_surjectivity(s.M, {from.first, from.second}, {step.first, step.second});
             })
        .def("verify",
             [](const PyModule& s, const std::tuple<int, int, int, int>& w) {
                 std::vector<std::tuple<std::string, std::string, std::string>> out;
                 for (const auto& c : cross_validate(s.M, window_of(w))) out.emplace_back(c.name, to_string(c.status), c.detail);
                 return out;
             },
             py::arg("window") = std::make_tuple(-3, 3, -3, 3))
        .def("classical_reduction", [](const PyModule& s) {
            const auto r = classical_reduction_check(s.M);
            py::dict d;
            d["block"] = std::string(1, r.block);
            d["classical"] = r.classical ? py::cast(*r.classical) : py::none();
            d["frontier_coordinate"] = r.frontier_coordinate ? py::cast(*r.frontier_coordinate) : py::none();
            d["agree"] = r.agree;
            return d;
        });

    m.def("serre_dim", &serre_dim, py::arg("m"), py::arg("k"), py::arg("a"));
    m.def("kunneth_dim", &kunneth_dim, py::arg("m"), py::arg("n"), py::arg("k"), py::arg("kp"), py::arg("i"));
    m.def(
        "free_lc_dim",
        [](const std::string& kind, int i, std::pair<int, int> twist, std::pair<int, int> d, int mm, int n) {
            return free_lc_dim(ideal_kind_from_string(kind), i, {twist.first, twist.second}, {d.first, d.second}, mm, n);
        },
        py::arg("ideal"), py::arg("i"), py::arg("twist"), py::arg("d"), py::arg("m"), py::arg("n"));
    m.def(
        "sheaf_regular",
        [](int mm, int n, const std::vector<std::pair<int, int>>& twists, int p, int pp) {
            LineBundleSum F{mm, n, {}};
            for (auto [a, b] : twists) F.twists.push_back({a, b});
            return sheaf_regularity_check(F, p, pp);
        },
        py::arg("m"), py::arg("n"), py::arg("twists"), py::arg("p"), py::arg("pp"));
    m.def(
        "region_points",
        [](const std::string& kind, int i, int p, int pp, const std::tuple<int, int, int, int>& w) {
            std::vector<std::pair<int, int>> out;
            for (Bidegree q : Region(region_kind_from_string(kind), i, p, pp).points(window_of(w))) out.emplace_back(q.a, q.b);
            return out;
        },
        py::arg("kind"), py::arg("i"), py::arg("p"), py::arg("pp"), py::arg("window"));
    m.def(
        "render_region",
        [](const std::string& kind, int i, int p, int pp, const std::tuple<int, int, int, int>& w) {
            return render_region(Region(region_kind_from_string(kind), i, p, pp), window_of(w));
        },
        py::arg("kind"), py::arg("i"), py::arg("p"), py::arg("pp"), py::arg("window"));
    m.def("run_cli", [](const std::vector<std::string>& args) {
        const CliOutcome r = run_cli(args);
        return py::make_tuple(r.code, r.out, r.err);
    });
}
