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

#include "gradedlie/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "gradedlie/errors.hpp"
#include "gradedlie/version.hpp"

namespace gradedlie::io {

namespace {

/* A JSON value together with its location, for schema diagnostics. */
class Node {
public:
    Node(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const Json& raw() const { return *j_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void fail(const std::string& what) const { throw InputError(path_ + ": " + what); }

    void require_object(std::initializer_list<const char*> allowed) const {
        if (!j_->is_object()) fail("expected an object");
        for (const auto& [key, value] : j_->items()) {
            bool known = false;
            for (const char* a : allowed) known = known || key == a;
            if (!known) fail("unknown key '" + key + "'");
        }
    }
    Node at(const char* key) const {
        auto it = j_->find(key);
        if (it == j_->end()) fail(std::string("missing key '") + key + "'");
        return Node(*it, path_ + "." + key);
    }
    std::optional<Node> find(const char* key) const {
        auto it = j_->find(key);
        if (it == j_->end()) return std::nullopt;
        return Node(*it, path_ + "." + key);
    }
    std::vector<Node> array() const {
        if (!j_->is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "[" + std::to_string(i) + "]");
        return out;
    }
    long long integer() const {
        if (!j_->is_number_integer()) fail("expected an integer");
        return j_->get<long long>();
    }
    double number() const {
        if (!j_->is_number()) fail("expected a number");
        return j_->get<double>();
    }
    bool boolean() const {
        if (!j_->is_boolean()) fail("expected true or false");
        return j_->get<bool>();
    }
    std::string string() const {
        if (!j_->is_string()) fail("expected a string");
        return j_->get<std::string>();
    }

private:
    const Json* j_;
    std::string path_;
};

template <class F>
auto rethrow_at(const Node& n, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        const std::string what = e.what();
        if (what.rfind("$", 0) == 0) throw;
        n.fail(what);
    }
}

Rational rational_of(const Node& n) {
    if (n.raw().is_number_integer()) return Rational(n.raw().get<long long>());
    if (n.raw().is_string()) return rethrow_at(n, [&] { return Rational::parse(n.raw().get<std::string>()); });
    n.fail("expected an integer or a rational string");
}

BracketExpr monomial_of(const Node& n, FreeLieAlgebra& algebra) {
    if (n.raw().is_string()) {
        return rethrow_at(n, [&] { return BracketExpr::leaf(algebra.generator(n.raw().get<std::string>())); });
    }
    auto parts = n.array();
    if (parts.size() != 2) n.fail("a bracket is a two-element array");
    return BracketExpr::bracket(monomial_of(parts[0], algebra), monomial_of(parts[1], algebra));
}

LieElement element_of(const Node& n, FreeLieAlgebra& algebra) {
    LieElement out;
    for (const Node& term : n.array()) {
        auto parts = term.array();
        if (parts.size() != 2 && parts.size() != 3) term.fail("a term is [monomial, numerator, denominator]");
        Rational c = rational_of(parts[1]);
        if (parts.size() == 3) {
            Rational d = rational_of(parts[2]);
            if (d.is_zero()) parts[2].fail("zero denominator");
            c /= d;
        }
        out += algebra.normalize(monomial_of(parts[0], algebra)) * c;
    }
    return out;
}

std::vector<long long> integers_of(const Node& n) {
    std::vector<long long> out;
    for (const Node& x : n.array()) out.push_back(x.integer());
    return out;
}

std::size_t basis_index(const Node& n, const std::vector<std::string>& labels) {
    if (n.raw().is_string()) {
        const std::string s = n.raw().get<std::string>();
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == s) return i;
        }
        n.fail("unknown basis label '" + s + "'");
    }
    const long long i = n.integer();
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size()) n.fail("basis index out of range");
    return static_cast<std::size_t>(i);
}

CyclotomicNumber cyclotomic_of(const Node& n, const FieldPtr& field) {
    if (!n.raw().is_array()) return field->rational(rational_of(n));
    std::vector<Rational> poly;
    for (const Node& c : n.array()) poly.push_back(rational_of(c));
    return field->from_polynomial(std::move(poly));
}

CycMatrix matrix_of(const Node& n, const FieldPtr& field, std::size_t dim) {
    auto rows = n.array();
    if (rows.size() != dim) n.fail("expected " + std::to_string(dim) + " rows, found " + std::to_string(rows.size()));
    CycMatrix m(field, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        auto cols = rows[r].array();
        if (cols.size() != dim) {
            rows[r].fail("expected " + std::to_string(dim) + " entries, found " + std::to_string(cols.size()));
        }
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = cyclotomic_of(cols[c], field);
    }
    return m;
}

}  // namespace

Json load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_to_json(const Rational& q) { return q.str(); }

Rational rational_from_json(const Json& j, const std::string& path) { return rational_of(Node(j, path)); }

Json monomial_to_json(const HallMonomial& m, const GeneratorSet& gens) {
    if (m.is_generator()) return gens[static_cast<unsigned char>(m.word()[0])].name;
    return Json::array({monomial_to_json(m.left(), gens), monomial_to_json(m.right(), gens)});
}

Json element_to_json(const LieElement& e, const GeneratorSet& gens) {
    Json out = Json::array();
    for (const auto& [m, c] : e.terms()) {
        out.push_back(Json::array({monomial_to_json(m, gens), c.numerator_string(), c.denominator_string()}));
    }
    return out;
}

LieElement element_from_json(const Json& j, FreeLieAlgebra& algebra, const std::string& path) {
    return element_of(Node(j, path), algebra);
}

Json presentation_to_json(const GradedPresentation& p) {
    Json gens = Json::array();
    for (const auto& g : p.generators().all()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    Json families = Json::array();
    for (const auto& f : p.families()) {
        Json fam{{"kind", relator_kind_name(f.kind)}};
        if (f.kind == RelatorKind::ExplicitList) {
            Json elems = Json::array();
            for (const auto& e : f.elements) elems.push_back(element_to_json(e, p.generators()));
            fam["elements"] = elems;
        }
        families.push_back(fam);
    }
    return {{"modulus", p.modulus()}, {"generators", gens}, {"relator_families", families}, {"cutoff", p.cutoff()}};
}

GradedPresentation presentation_from_json(const Json& j) {
    const Node root(j, "$");
    root.require_object({"modulus", "generators", "relator_families", "cutoff"});
    const long long modulus = root.at("modulus").integer();
    std::vector<Generator> gens;
    for (const Node& g : root.at("generators").array()) {
        g.require_object({"name", "degree"});
        gens.push_back({g.at("name").string(), g.at("degree").integer()});
    }
    const int cutoff = root.find("cutoff") ? static_cast<int>(root.at("cutoff").integer()) : 6;
    // Explicit elements need an algebra over the generators to be parsed.
    std::optional<FreeLieAlgebra> parser;
    std::vector<RelatorFamily> families;
    if (auto fams = root.find("relator_families")) {
        for (const Node& f : fams->array()) {
            f.require_object({"kind", "elements"});
            const RelatorKind kind = rethrow_at(f, [&] { return parse_relator_kind(f.at("kind").string()); });
            RelatorFamily family{kind, {}};
            if (auto elems = f.find("elements")) {
                if (kind != RelatorKind::ExplicitList) elems->fail("only ExplicitList families carry elements");
                if (!parser) parser.emplace(rethrow_at(root, [&] { return GeneratorSet(modulus, gens); }));
                for (const Node& e : elems->array()) family.elements.push_back(element_of(e, *parser));
            }
            families.push_back(std::move(family));
        }
    }
    return rethrow_at(root, [&] { return GradedPresentation(modulus, gens, std::move(families), cutoff); });
}

Json snapshot_to_json(const IdealSnapshot& s, const GeneratorSet& gens) {
    Json comps = Json::object();
    for (const auto& [key, rows] : s.components) comps[key.str(gens)] = rows.rank();
    Json census = Json::object();
    for (const auto& [d, dim] : s.zn_census(gens)) census[std::to_string(d)] = dim;
    return {{"description", s.description},
            {"ambient", s.ambient == Ambient::Whole ? "L" : "M"},
            {"total_dimension", s.total_dimension()},
            {"components", comps},
            {"zn_census", census}};
}

Json residues_to_json(int modulus, const std::vector<int>& values) {
    return {{"modulus", modulus}, {"values", values}};
}

AlgebraFile algebra_from_json(const Json& j) {
    const Node root(j, "$");
    root.require_object({"order", "field_order", "labels", "dimension", "structure_constants", "phi", "h"});
    AlgebraFile out;
    const long long order = root.at("order").integer();
    if (order < 1 || order > 100000) root.at("order").fail("order must lie in [1, 100000]");
    long long field_order = order;
    if (auto f = root.find("field_order")) {
        field_order = f->integer();
        if (field_order < 1 || field_order > 100000 || field_order % order != 0) {
            f->fail("field_order must be a positive multiple of order");
        }
    }
    out.order = static_cast<int>(order);
    out.field = CyclotomicField::create(static_cast<int>(field_order));
    std::vector<std::string> labels;
    for (const Node& l : root.at("labels").array()) labels.push_back(l.string());
    if (auto d = root.find("dimension")) {
        if (d->integer() != static_cast<long long>(labels.size())) d->fail("dimension does not match the labels");
    }
    std::vector<StructureConstant> entries;
    for (const Node& e : root.at("structure_constants").array()) {
        auto parts = e.array();
        if (parts.size() != 4) e.fail("a structure constant is [i, j, k, coefficient]");
        entries.push_back({basis_index(parts[0], labels), basis_index(parts[1], labels), basis_index(parts[2], labels),
                           cyclotomic_of(parts[3], out.field)});
    }
    out.algebra.emplace(rethrow_at(root, [&] { return SCAlgebra(out.field, labels, entries); }));
    out.automorphisms.order = out.order;
    out.automorphisms.phi = matrix_of(root.at("phi"), out.field, labels.size());
    if (auto h = root.find("h")) out.automorphisms.h = matrix_of(*h, out.field, labels.size());
    return out;
}

Json cyclotomic_to_json(const CyclotomicNumber& c) {
    Json out = Json::array();
    for (const auto& q : c.coefficients()) out.push_back(q.str());
    return out;
}

Json grading_to_json(const Grading& g) {
    Json dims = Json::object();
    Json comps = Json::object();
    for (int i = 0; i < g.order; ++i) {
        if (g.dimension(i) == 0) continue;
        dims[std::to_string(i)] = g.dimension(i);
        Json basis = Json::array();
        for (const auto& v : g.components[static_cast<std::size_t>(i)]) {
            Json vec = Json::array();
            for (const auto& x : v) vec.push_back(cyclotomic_to_json(x));
            basis.push_back(vec);
        }
        comps[std::to_string(i)] = basis;
    }
    return {{"order", g.order}, {"dimensions", dims}, {"components", comps}};
}

Json checklist_to_json(const CheckList& c) {
    Json out = Json::array();
    for (const auto& item : c.items) {
        Json j{{"name", item.name}, {"passed", item.passed}};
        if (!item.witness.empty()) j["witness"] = item.witness;
        out.push_back(j);
    }
    return out;
}

Json check_config_to_json(const CheckConfig& c) {
    return {{"lemma", lemma_name(c.lemma)},   {"modulus", c.modulus},
            {"indices", c.indices},           {"extra", c.extra},
            {"cutoff", c.cutoff},             {"multiplicity", c.multiplicity},
            {"budget_seconds", c.budget_seconds}, {"control", c.control}};
}

CheckConfig check_config_from_json(const Json& j, const std::string& path) {
    const Node root(j, path);
    root.require_object({"lemma", "modulus", "indices", "extra", "cutoff", "multiplicity", "budget_seconds", "control"});
    CheckConfig c;
    c.lemma = rethrow_at(root, [&] { return parse_lemma(root.at("lemma").string()); });
    c.modulus = root.at("modulus").integer();
    c.indices = integers_of(root.at("indices"));
    if (auto e = root.find("extra")) c.extra = integers_of(*e);
    if (auto x = root.find("cutoff")) c.cutoff = static_cast<int>(x->integer());
    if (auto x = root.find("multiplicity")) c.multiplicity = static_cast<int>(x->integer());
    if (auto x = root.find("budget_seconds")) {
        c.budget_seconds = x->number();
        if (c.budget_seconds < 0) x->fail("budget must be nonnegative");
    }
    if (auto x = root.find("control")) c.control = x->boolean();
    return c;
}

std::vector<CheckConfig> campaign_from_json(const Json& j) {
    std::vector<CheckConfig> out;
    for (const Node& c : Node(j, "$").array()) out.push_back(check_config_from_json(c.raw(), c.path()));
    return out;
}

Json report_to_json(const CheckReport& r, bool timings) {
    Json out{{"version", kVersion},
             {"lemma", lemma_name(r.lemma)},
             {"control", r.control},
             {"verdict", verdict_name(r.verdict)},
             {"summary", r.summary},
             {"notes", r.notes},
             {"statistics", r.statistics}};
    if (r.witness && r.presentation) {
        out["witness"] = {{"fine_degree", r.witness_degree},
                          {"element", element_to_json(*r.witness, r.presentation->generators())},
                          {"presentation", presentation_to_json(*r.presentation)}};
    }
    if (timings) out["seconds"] = r.seconds;
    return out;
}

Json campaign_summary_to_json(const CampaignSummary& s, bool timings) {
    Json verdicts = Json::object();
    for (const auto& [v, n] : s.verdicts) verdicts[verdict_name(v)] = n;
    Json failures = Json::array();
    for (const auto& f : s.failures) failures.push_back(report_to_json(f, timings));
    Json out{{"version", kVersion}, {"lemma", lemma_name(s.lemma)}, {"runs", s.runs}, {"verdicts", verdicts},
             {"failures", failures}};
    if (timings) out["seconds"] = s.seconds;
    return out;
}

Json constants_to_json(const BoundConstants& c, bool exact_digits) {
    Json e{{"symbolic", c.e_bound.str()},
           {"coefficient", c.e_bound.coefficient},
           {"base", c.e_bound.base},
           {"exponent", c.e_bound.exponent},
           {"decimal_digits", c.e_bound.decimal_digits()}};
    if (exact_digits) e["exact_decimal_digits"] = c.e_bound.exact_decimal_digits();
    return {{"version", kVersion}, {"dtilde_max", c.dtilde_max}, {"u_max", c.u_max},
            {"e_bound", e},        {"f1", c.f1},                 {"final_length", c.final_length}};
}

}  // namespace gradedlie::io
