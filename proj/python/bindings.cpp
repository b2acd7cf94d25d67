/* Copyright 2026 The gradedlie Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gradedlie/bounds.hpp"
#include "gradedlie/cli.hpp"
#include "gradedlie/errors.hpp"
#include "gradedlie/free_lie.hpp"
#include "gradedlie/harness.hpp"
#include "gradedlie/json_io.hpp"
#include "gradedlie/version.hpp"
#include "gradedlie/zn.hpp"

namespace py = pybind11;
using namespace gradedlie;

namespace {

std::vector<int> values_of(const zn::ResidueSet& s) {
    std::vector<int> out;
    for (const auto& r : s) out.push_back(r.value());
    return out;
}

io::Json parse(const std::string& text) {
    try {
        return io::Json::parse(text);
    } catch (const io::Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

// Everything structured crosses the boundary as JSON text; the Python layer turns it into dicts.
std::string check_json(const std::string& config, bool timings) {
    return io::dump(io::report_to_json(run_check(io::check_config_from_json(parse(config))), timings));
}

std::string fuzz_json(const std::string& lemma, int runs, uint64_t seed, long long max_modulus, double budget) {
    return io::dump(io::campaign_summary_to_json(fuzz_campaign(parse_lemma(lemma), runs, seed, max_modulus, budget)));
}

py::tuple run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Graded Lie algebra toolkit: Z/n combinatorics, quotient construction and checks";
    m.attr("__version__") = kVersion;

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_TimeoutError);

    m.def(
        "is_minus_one_dependent",
        [](long long n, const std::vector<long long>& seq) { return zn::is_minus_one_dependent(zn::IndexSequence(n, seq)); },
        py::arg("n"), py::arg("seq"));
    m.def(
        "dependency_set",
        [](long long n, const std::vector<long long>& seq) { return values_of(zn::dependency_set(zn::IndexSequence(n, seq))); },
        py::arg("n"), py::arg("seq"));
    m.def(
        "dtilde_set",
        [](long long n, const std::vector<long long>& seq) { return values_of(zn::dtilde_set(zn::IndexSequence(n, seq))); },
        py::arg("n"), py::arg("seq"));
    m.def(
        "witt_dimension",
        [](const std::vector<int>& counts) {
            std::vector<uint8_t> c;
            for (int x : counts) {
                if (x < 0 || x > 255) throw InputError("letter counts must lie in 0..255");
                c.push_back(static_cast<uint8_t>(x));
            }
            return witt_dimension(FineDegree(c));
        },
        py::arg("counts"));

    m.def("_check", &check_json, py::arg("config"), py::arg("timings") = false);
    m.def("_fuzz", &fuzz_json, py::arg("lemma"), py::arg("runs"), py::arg("seed"), py::arg("max_modulus"),
          py::arg("budget_seconds") = 0.0);
    m.def(
        "_constants",
        [](uint64_t f1, bool exact) { return io::dump(io::constants_to_json(bound_constants(f1), exact)); },
        py::arg("f1") = 3, py::arg("exact_digits") = false);
    m.def("run_cli", &run_cli, py::arg("args"), "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
