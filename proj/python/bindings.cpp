/* Copyright 2026 The skewlat Authors.

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewlat/error.hpp"
#include "skewlat/pipeline.hpp"

namespace py = pybind11;
using namespace skewlat;

namespace {

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::InvalidArgument, e.what());
    }
}

}  // namespace

PYBIND11_MODULE(_skewlat, m) {
    m.doc() = "Skew polynomial algebras, codes and lattices (native core)";

    static py::exception<Error> error_type(m, "SkewlatError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = py::reinterpret_borrow<py::object>(error_type);
            py::object err = cls(std::string(error_name(e.code())) + ": " + e.what());
            err.attr("code") = std::string(error_name(e.code()));
            err.attr("exit_code") = exit_code(e.code());
            PyErr_SetObject(error_type.ptr(), err.ptr());
        }
    });

    m.def(
        "run",
        [](const std::string& command, const std::string& config) {
            return run_command(command, parse_config(parse(config))).dump();
        },
        py::arg("command"), py::arg("config"), "Run a pipeline command on a JSON config; returns the artifact as JSON.");
    m.def(
        "verify", [](const std::string& artifact) { return verify_artifact(parse(artifact)).dump(); }, py::arg("artifact"));
    m.def(
        "config_hash", [](const std::string& config) { return config_hash(config_to_json(parse_config(parse(config)))); },
        py::arg("config"));
    m.def(
        "codewords_csv", [](const std::string& config) { return selected_code_csv(parse_config(parse(config))); },
        py::arg("config"));

    py::class_<Tower>(m, "Tower")
        .def(py::init([](std::int64_t p, int precision, int unramified_degree, int ramification, std::int64_t unit,
                         const std::string& kind) {
                 return Tower(TowerSpec{base_kind_from_string(kind), p, precision, unramified_degree, ramification, unit});
             }),
             py::arg("p"), py::arg("precision") = 32, py::arg("unramified_degree") = 1, py::arg("ramification") = 1,
             py::arg("unit") = 1, py::arg("kind") = "p-adic")
        .def_property_readonly("e", &Tower::e)
        .def_property_readonly("f", &Tower::f)
        .def_property_readonly("degree", &Tower::degree)
        .def_property_readonly("galois", &Tower::galois)
        .def_property_readonly("residue_modulus", &Tower::residue_modulus)
        .def_property_readonly("generators",
                               [](const Tower& t) {
                                   std::vector<std::pair<std::string, int>> out;
                                   for (const auto& g : t.galois_generators()) out.emplace_back(g.name, g.order);
                                   return out;
                               })
        .def_property_readonly("residue_size", [](const Tower& t) { return t.residue_ring()->size(); })
        .def("__repr__", [](const Tower& t) { return "<Tower " + t.ring()->name() + ">"; });
}
