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

// JSON encodings of presentations, elements, structure-constant algebras,
// check configurations and reports. Keys are emitted in sorted order.

#ifndef GRADEDLIE_JSON_IO_HPP
#define GRADEDLIE_JSON_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gradedlie/bounds.hpp"
#include "gradedlie/eigenspace.hpp"
#include "gradedlie/free_lie.hpp"
#include "gradedlie/harness.hpp"
#include "gradedlie/quotient.hpp"

namespace gradedlie::io {

using Json = nlohmann::json;

// Parses a file; InputError on I/O or syntax errors.
Json load_file(const std::filesystem::path& path);
// Two-space indented, sorted keys, trailing newline.
std::string dump(const Json& j);

Json rational_to_json(const Rational& q);  // "p/q" or "p"
Rational rational_from_json(const Json& j, const std::string& path = "$");

// Generators are names; brackets are two-element arrays.
Json monomial_to_json(const HallMonomial& m, const GeneratorSet& gens);
// A list of [monomial, numerator, denominator]; the monomials need not be basis elements.
Json element_to_json(const LieElement& e, const GeneratorSet& gens);
LieElement element_from_json(const Json& j, FreeLieAlgebra& algebra, const std::string& path = "$");

Json presentation_to_json(const GradedPresentation& p);
GradedPresentation presentation_from_json(const Json& j);

Json snapshot_to_json(const IdealSnapshot& s, const GeneratorSet& gens);

// {"modulus": n, "values": [...]} with least nonnegative representatives.
Json residues_to_json(int modulus, const std::vector<int>& values);

/* Structure-constant algebra with its automorphisms:
 *   {"order": n, "field_order": m (optional, multiple of n, default n),
 *    "labels": [...], "dimension": d (optional),
 *    "structure_constants": [[i, j, k, c], ...],
 *    "phi": [[c, ...], ...], "h": [[c, ...], ...] (optional)}
 * Indices are 0-based positions or labels. A coefficient c is an integer, a
 * rational string, or an array of those giving a polynomial in w (lowest
 * degree first), w a primitive m-th root of unity. Matrix column j is the
 * image of basis vector j. */
struct AlgebraFile {
    int order = 1;
    FieldPtr field;
    std::optional<SCAlgebra> algebra;
    AutomorphismPair automorphisms;
};
AlgebraFile algebra_from_json(const Json& j);
Json cyclotomic_to_json(const CyclotomicNumber& c);
Json grading_to_json(const Grading& g);
Json checklist_to_json(const CheckList& c);

Json check_config_to_json(const CheckConfig& c);
CheckConfig check_config_from_json(const Json& j, const std::string& path = "$");
// A JSON array of check configurations.
std::vector<CheckConfig> campaign_from_json(const Json& j);
// Wall time is included only when `timings` is set, so that reports of
// identical inputs are byte-identical by default.
Json report_to_json(const CheckReport& r, bool timings = false);
Json campaign_summary_to_json(const CampaignSummary& s, bool timings = false);

Json constants_to_json(const BoundConstants& c, bool exact_digits = false);

}  // namespace gradedlie::io

#endif  // GRADEDLIE_JSON_IO_HPP
