#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invforms/errors.hpp"
#include "invforms/report.hpp"

namespace py = pybind11;
using namespace invforms;

namespace {

std::string dump(const nlohmann::json& j) { return j.dump(); }

Weight make_weight(const ActionSpec& a, const std::vector<long long>& values) {
    if (values.size() != static_cast<std::size_t>(a.torus_rank + a.finite_rank()))
        throw ValidationError("weight needs " + std::to_string(a.torus_rank + a.finite_rank()) + " components");
    Weight w = a.zero_weight();
    for (int j = 0; j < a.torus_rank; ++j) w.torus[j] = values[j];
    for (int j = 0; j < a.finite_rank(); ++j) {
        const long long m = a.finite_orders[j];
        w.finite[j] = ((values[a.torus_rank + j] % m) + m) % m;
    }
    return w;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Invariant and horizontal differential forms for diagonal group actions";
    m.attr("__version__") = engine_version();

    auto base = py::register_exception<Error>(m, "InvformsError", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

    py::class_<ActionSpec>(m, "ActionSpec")
        .def(py::init([](int n, int torus_rank, std::vector<long long> finite_orders, std::vector<std::vector<long long>> rows) {
                 return validate_action(ActionSpec{n, torus_rank, std::move(finite_orders), std::move(rows)}).action;
             }),
             py::arg("n"), py::arg("torus_rank"), py::arg("finite_orders"), py::arg("weight_matrix"))
        .def_readonly("n", &ActionSpec::n)
        .def_readonly("torus_rank", &ActionSpec::torus_rank)
        .def_readonly("finite_orders", &ActionSpec::finite_orders)
        .def_readonly("weight_matrix", &ActionSpec::weight_matrix)
        .def("to_json", [](const ActionSpec& a) { return action_to_json(a); })
        .def_static("from_json", [](const std::string& text) { return action_from_json(text); })
        .def("__eq__", [](const ActionSpec& a, const ActionSpec& b) { return a == b; })
        .def("__repr__", [](const ActionSpec& a) { return "ActionSpec(" + action_to_json(a) + ")"; });

    m.def("cyclic_action", &cyclic_action, py::arg("order"), py::arg("weights"));
    m.def("torus_action", &torus_action, py::arg("rows"));
    m.def("trivial_action", &trivial_action, py::arg("n"));

    m.def(
        "_analyze",
        [](const ActionSpec& a, std::optional<int> max_degree, std::vector<int> form_degrees) {
            AnalyzeOptions opt;
            opt.max_degree = max_degree;
            opt.form_degrees = std::move(form_degrees);
            py::gil_scoped_release release;
            return dump(analyze(a, opt).report);
        },
        py::arg("action"), py::arg("max_degree") = py::none(), py::arg("form_degrees") = std::vector<int>{});

    m.def(
        "hilbert_basis",
        [](const ActionSpec& a, int bound) {
            const MonoidBasis b = hilbert_basis(a, bound);
            return py::make_tuple(b.generators, b.complete);
        },
        py::arg("action"), py::arg("bound"));

    m.def(
        "invariant_ring_series",
        [](const ActionSpec& a, int truncation) {
            return hilbert_series_of(hilbert_basis(a, std::max(truncation, 1)), a, truncation).coefficients;
        },
        py::arg("action"), py::arg("truncation"));

    m.def(
        "_surjectivity",
        [](const ActionSpec& a, int k, int bound) { return dump(to_json(surjectivity_check(a, k, bound))); },
        py::arg("action"), py::arg("k"), py::arg("bound"));

    m.def(
        "_smoothness",
        [](const ActionSpec& a, int bound) { return dump(to_json(smoothness_verdict(a, bound))); },
        py::arg("action"), py::arg("bound"));

    m.def(
        "euler_homology",
        [](const ActionSpec& a, int degree, std::vector<long long> weight, int torus_index, bool point_quotient) {
            EulerHomologyOptions opt;
            opt.torus_index = torus_index;
            opt.point_quotient = point_quotient;
            const EulerHomology h = euler_homology(a, degree, make_weight(a, weight), opt);
            return py::make_tuple(h.piece_dimensions, h.homology);
        },
        py::arg("action"), py::arg("degree"), py::arg("weight"), py::arg("torus_index") = 0,
        py::arg("point_quotient") = false);

    m.def(
        "_canonical", [](const ActionSpec& a, int truncation) { return dump(canonical_report(a, truncation)); },
        py::arg("action"), py::arg("truncation") = 10);

    m.def("torsion_free_rank", &torsion_free_rank, py::arg("action"), py::arg("k"));
    m.def("quotient_dimension", &quotient_dimension, py::arg("action"));
}
