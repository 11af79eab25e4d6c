#include "skein/errors.hpp"
#include "skein/invariants.hpp"
#include "skein/stability.hpp"
#include "skein/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace skein;

namespace {

py::dict to_dict(const LaurentPoly& f) {
    py::dict out;
    py::object as_int = py::module_::import("builtins").attr("int");
    for (const auto& [e, c] : f.terms()) {
        if (c.get_den() != 1) throw SkeinError("non-integral coefficient " + c.get_str());
        out[py::int_(e)] = as_int(c.get_num().get_str());
    }
    return out;
}

CoeffList to_list(const std::vector<long long>& v) {
    CoeffList c;
    c.coeffs = v;
    return c;
}

InvariantOptions options(int threads) {
    InvariantOptions o;
    o.threads = threads;
    return o;
}

}  // namespace

PYBIND11_MODULE(_skein, m) {
    m.doc() = "Kauffman bracket, colored Jones polynomials and tail stability";

    static py::exception<SkeinError> base(m, "SkeinError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<BudgetError>(m, "BudgetError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<RangeError>(m, "RangeError", base.ptr());
    py::register_exception<InsufficientWindowError>(m, "InsufficientWindowError", base.ptr());

    py::class_<LinkDiagram>(m, "Diagram")
        .def_readonly("name", &LinkDiagram::name)
        .def_property_readonly("crossing_count", &LinkDiagram::crossing_count)
        .def_property_readonly("region_sizes",
                               [](const LinkDiagram& d) {
                                   std::vector<int> out;
                                   for (const auto& r : d.regions) out.push_back(r.count);
                                   return out;
                               })
        .def("to_pd", &LinkDiagram::to_pd)
        .def("to_json", [](const LinkDiagram& d) { return to_json(d); })
        .def("set_twists", [](const LinkDiagram& d, const std::map<int, int>& deltas) { return set_twists(d, deltas); })
        .def("__repr__", [](const LinkDiagram& d) { return "<Diagram " + d.name + ">"; });

    m.def("pretzel", &pretzel, py::arg("counts"));
    m.def("parse_pd", &parse_pd, py::arg("text"));
    m.def("from_json", &from_json, py::arg("text"));
    m.def("unknot", &unknot);
    m.def("mirror", [](const LinkDiagram& d) { return mirror(d); });

    m.def("circle_count_minus", &circle_count_minus);
    m.def("circle_count_plus", &circle_count_plus);
    m.def("is_adequate", &is_adequate);
    m.def("is_minus_adequate", &is_minus_adequate);
    m.def("is_alternating", &is_alternating);
    m.def("minus_graph_dot", [](const LinkDiagram& d, bool reduced) {
        auto g = minus_graph(d);
        return (reduced ? g.reduce() : g).to_dot(reduced ? "G_minus_reduced" : "G_minus");
    }, py::arg("diagram"), py::arg("reduced") = false);

    m.def("bracket", [](const LinkDiagram& d, int threads) { return to_dict(bracket_state_sum(d, options(threads)).value); },
          py::arg("diagram"), py::arg("threads") = 0, "Kauffman bracket as {A-exponent: coefficient}");
    m.def("colored_bracket",
          [](const LinkDiagram& d, int n, int threads) { return to_dict(unreduced_colored_jones(d, n, options(threads)).value); },
          py::arg("diagram"), py::arg("n"), py::arg("threads") = 0, "Bracket of the n-cabled diagram with projectors");
    m.def("reduced_jones",
          [](const LinkDiagram& d, int N, int threads) { return to_dict(reduced_jones_poly(d, N, options(threads))); },
          py::arg("diagram"), py::arg("N"), py::arg("threads") = 0, "Reduced J_N in the variable A = q^(1/4)");
    m.def("jones_window",
          [](const LinkDiagram& d, int N, std::size_t length, int threads) {
              return normalize(invariant_window(d, N - 1, Grading::QUnits, length, options(threads))).coeffs;
          },
          py::arg("diagram"), py::arg("N"), py::arg("length"), py::arg("threads") = 0,
          "Normalized lowest q-coefficients of the reduced J_N");
    m.def("predicted_min_degree", &predicted_min_degree, py::arg("diagram"), py::arg("n"));

    m.def("normalize", [](const std::vector<long long>& c) { return normalize(to_list(c)).coeffs; });
    m.def("n_equivalent", [](const std::vector<long long>& a, const std::vector<long long>& b, std::size_t n) {
        return n_equivalent(to_list(a), to_list(b), n);
    });
    m.def("stable_prefix", [](const std::vector<long long>& a, const std::vector<long long>& b) {
        return stable_prefix(to_list(a), to_list(b));
    });
    m.def("family_tail",
          [](const std::string& family, const std::string& color, int k_min, int k_max, const std::string& rate,
             bool projector, int threads) {
              FamilySpec spec = FamilySpec::pretzel_family(family);
              spec.color = FamilyExpr::parse(color);
              spec.index = projector ? ColorIndex::Projector : ColorIndex::Jones;
              spec.k_min = k_min;
              spec.k_max = k_max;
              return family_tail(spec, FamilyExpr::parse(rate), options(threads)).to_json();
          },
          py::arg("family"), py::arg("color") = "2", py::arg("k_min") = 1, py::arg("k_max") = 1,
          py::arg("rate") = "k+1", py::arg("projector_color") = false, py::arg("threads") = 0,
          "JSON report of a pretzel family tail, e.g. family_tail(\"P(8,6,k)\", k_max=10)");
    m.def("verify", [](const std::string& suite) { return run_suite(suite).to_json(); }, py::arg("suite"));
}
