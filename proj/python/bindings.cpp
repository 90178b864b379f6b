#include <optional>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scl/errors.hpp"
#include "scl/json_io.hpp"
#include "scl/scl.hpp"
#include "scl/surface.hpp"
#include "scl/turn_graph.hpp"
#include "scl/word.hpp"

namespace py = pybind11;
using namespace scl;

namespace {

CyclicWord reduce(const std::string& text) { return cyclically_reduce(parse_word(text)).word; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact stable commutator length in free groups";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);

    m.def("reduce", [](const std::string& text) { return reduce(text).to_string(); }, py::arg("word"));

    m.def(
        "compute_scl",
        [](const std::string& text, std::size_t max_circuits, bool verify) {
            std::optional<SclResult> r;
            {
                py::gil_scoped_release release;
                r.emplace(compute_scl(text, {.max_circuits = max_circuits}));
                if (verify && !r->infinite) verify_certificate(*r);
            }
            return result_to_json(*r).dump();
        },
        py::arg("word"), py::arg("max_circuits") = kDefaultCircuitCap, py::arg("verify") = false);

    m.def(
        "surface",
        [](const std::string& text, std::size_t max_circuits) {
            const auto r = compute_scl(text, {.max_circuits = max_circuits});
            if (r.infinite) throw InputError("word is not in the commutator subgroup");
            return surface_to_json(build_surface(TurnGraph(r.word), r.circuits, r.integer_weights)).dump();
        },
        py::arg("word"), py::arg("max_circuits") = kDefaultCircuitCap);

    m.def("dot", [](const std::string& text) { return export_dot(TurnGraph(reduce(text))); }, py::arg("word"));

    m.def(
        "oracle",
        [](const std::string& text, int n_max) {
            py::gil_scoped_release release;
            return brute_force_scl_bound(reduce(text), n_max).to_string();
        },
        py::arg("word"), py::arg("n_max"));

    m.attr("SCHEMA_VERSION") = kSchemaVersion;
}
