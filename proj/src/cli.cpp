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

#include "gradedlie/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"

#include "gradedlie/errors.hpp"
#include "gradedlie/json_io.hpp"
#include "gradedlie/version.hpp"
#include "gradedlie/zn.hpp"

namespace gradedlie::cli {

namespace {

using io::Json;

struct Common {
    std::string output = "table";
    bool dry_run = false;
    std::optional<double> budget_seconds;

    bool json() const { return output == "json"; }
};

void add_common(CLI::App* app, Common& c, bool with_budget, bool with_dry_run) {
    app->add_option("--output", c.output, "Output format")->check(CLI::IsMember({"json", "table"}));
    if (with_budget) app->add_option("--budget-seconds", c.budget_seconds, "Per-check time budget")->check(CLI::NonNegativeNumber);
    if (with_dry_run) app->add_flag("--dry-run", c.dry_run, "Validate and estimate without row reduction");
}

double default_budget(const Common& c) {
    if (c.budget_seconds) return *c.budget_seconds;
    if (const char* env = std::getenv(kBudgetVariable)) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || v < 0) {
            throw InputError(std::string(kBudgetVariable) + " must be a nonnegative number");
        }
        return v;
    }
    return 0;
}

std::string set_str(const std::vector<int>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << '}';
    return os.str();
}

std::vector<int> values_of(const zn::ResidueSet& s) {
    std::vector<int> out;
    for (const auto& r : s) out.push_back(r.value());
    return out;
}

// ---------------------------------------------------------------- deps

struct DepsArgs {
    Common common;
    long long n = 0;
    std::vector<long long> seq;
};

int deps(const DepsArgs& a, std::ostream& out) {
    const zn::IndexSequence seq(a.n, a.seq);
    const bool dependent = zn::is_minus_one_dependent(seq);
    const auto dtilde = values_of(zn::dtilde_set(seq));
    std::optional<std::vector<int>> dset;
    if (!dependent) dset = values_of(zn::dependency_set(seq));
    std::vector<int> orders;
    for (const auto& r : seq.entries()) orders.push_back(zn::residue_order(r));
    if (a.common.json()) {
        Json j{{"version", kVersion},
               {"sequence", io::residues_to_json(seq.modulus(), seq.values())},
               {"dependent", dependent},
               {"orders", orders},
               {"dtilde_set", dtilde}};
        if (dset) j["dependency_set"] = *dset;
        out << io::dump(j);
    } else {
        out << (dependent ? "dependent" : "independent") << "\n";
        out << "sequence " << seq.str() << ", orders " << set_str(orders) << "\n";
        if (dset) out << "D  = " << set_str(*dset) << "\n";
        out << "D~ = " << set_str(dtilde) << " (" << dtilde.size() << " elements)\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
    Common common;
    std::string file;
    std::optional<int> cutoff;
    bool derived = false;
};

int build(const BuildArgs& a, std::ostream& out) {
    GradedPresentation p = io::presentation_from_json(io::load_file(a.file));
    if (a.cutoff) p = p.with_cutoff(*a.cutoff);
    const GeneratorSet& gens = p.generators();
    const double budget = default_budget(a.common);

    Json comps = Json::array();
    std::map<int, std::size_t> census;
    uint64_t free_total = 0, quotient_total = 0;
    std::unique_ptr<QuotientAlgebra> q;
    if (!a.common.dry_run) {
        q = std::make_unique<QuotientAlgebra>(p);
        if (budget > 0) q->set_deadline(Deadline::after_seconds(budget));
    }
    FreeLieAlgebra lister(gens);
    QuotientAlgebra enumerator(p.with_families({}));
    std::vector<std::string> table;
    for (const FineDegree& k : enumerator.fine_degrees_up_to(p.cutoff())) {
        const uint64_t free_dim = witt_dimension(k);
        if (free_dim == 0) continue;
        Json c{{"fine_degree", k.str(gens)},
               {"length", k.length()},
               {"zn_degree", k.zn_degree(gens)},
               {"free_dimension", free_dim}};
        free_total += free_dim;
        std::ostringstream row;
        row << std::left << std::setw(28) << k.str(gens) << std::right << std::setw(4) << k.length() << std::setw(6)
            << k.zn_degree(gens) << std::setw(10) << free_dim;
        if (q) {
            const std::size_t dim = q->quotient_dimension(k);
            c["quotient_dimension"] = dim;
            quotient_total += dim;
            census[k.zn_degree(gens)] += dim;
            row << std::setw(10) << dim;
        }
        comps.push_back(c);
        table.push_back(row.str());
    }
    Json j{{"version", kVersion},
           {"presentation", io::presentation_to_json(p)},
           {"dry_run", a.common.dry_run},
           {"components", comps},
           {"free_dimension", free_total}};
    std::optional<DerivedLength> dl;
    if (q) {
        Json c = Json::object();
        for (auto [d, dim] : census) c[std::to_string(d)] = dim;
        j["quotient_dimension"] = quotient_total;
        j["zn_census"] = c;
        if (a.derived) {
            dl = q->derived_length();
            j["derived_length"] = {{"length", dl->length},
                                   {"vacuity_threshold", dl->vacuity_threshold},
                                   {"informative", dl->informative()}};
        }
    }
    if (a.common.json()) {
        out << io::dump(j);
        return kOk;
    }
    out << std::left << std::setw(28) << "fine degree" << std::right << std::setw(4) << "len" << std::setw(6) << "zn"
        << std::setw(10) << "free" << (q ? "  quotient" : "") << "\n";
    for (const auto& r : table) out << r << "\n";
    out << "total free dimension " << free_total;
    if (q) out << ", quotient dimension " << quotient_total;
    out << "\n";
    if (q) {
        out << "zn census:";
        for (auto [d, dim] : census) {
            if (dim) out << " " << d << ":" << dim;
        }
        out << "\n";
    }
    if (dl) {
        out << "derived length " << dl->length << " (vacuity threshold " << dl->vacuity_threshold << ", "
            << (dl->informative() ? "informative" : "vacuous") << ")\n";
    }
    return kOk;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    Common common;
    std::string file;
};

void print_checks(std::ostream& out, const CheckList& list) {
    for (const auto& item : list.items) {
        out << "  " << (item.passed ? "pass" : "FAIL") << "  " << item.name;
        if (!item.witness.empty()) out << "  witness " << item.witness;
        out << "\n";
    }
}

int decompose(const DecomposeArgs& a, std::ostream& out) {
    const io::AlgebraFile file = io::algebra_from_json(io::load_file(a.file));
    const SCAlgebra& alg = *file.algebra;
    const CheckList aut = verify_automorphism_pair(alg, file.automorphisms);
    Json j{{"version", kVersion}, {"order", file.order}, {"dimension", alg.dim()},
           {"automorphisms", io::checklist_to_json(aut)}};
    bool ok = aut.passed();
    std::optional<Grading> grading;
    std::optional<CheckList> hyp;
    std::optional<SelectiveViolation> violation;
    if (ok) {
        grading = eigenspace_decomposition(alg, file.automorphisms);
        j["grading"] = io::grading_to_json(*grading);
        if (file.automorphisms.h) {
            hyp = verify_hypotheses(alg, file.automorphisms);
            j["hypotheses"] = io::checklist_to_json(*hyp);
            ok = ok && hyp->passed();
        }
        violation = verify_selective_condition(alg, *grading);
        Json sel{{"passed", !violation}};
        if (violation) {
            Json value = Json::array();
            for (const auto& x : violation->value) value.push_back(io::cyclotomic_to_json(x));
            sel["violation"] = {{"degrees", violation->degrees}, {"positions", violation->positions}, {"value", value}};
        }
        j["selective_condition"] = sel;
        ok = ok && !violation;
    }
    if (a.common.json()) {
        out << io::dump(j);
    } else {
        out << "automorphisms (order " << file.order << ", dimension " << alg.dim() << ")\n";
        print_checks(out, aut);
        if (grading) {
            out << "grading dimensions:";
            for (int i = 0; i < grading->order; ++i) {
                if (grading->dimension(i)) out << " L_" << i << "=" << grading->dimension(i);
            }
            out << "\n";
        }
        if (hyp) {
            out << "hypotheses\n";
            print_checks(out, *hyp);
        }
        if (grading) {
            out << "selective condition: " << (violation ? "FAIL" : "pass");
            if (violation) {
                const auto& d = violation->degrees;
                out << " at degrees (" << d[0] << "," << d[1] << "," << d[2] << "," << d[3] << ")";
            }
            out << "\n";
        }
    }
    return ok ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    Common common;
    std::string file;
    std::string lemma;
    std::optional<long long> n;
    std::vector<long long> seq;
    std::vector<long long> extra;
    std::optional<int> cutoff;
    std::optional<int> multiplicity;
    bool control = false;
    int fuzz = 0;
    uint64_t seed = 1;
    long long max_n = 15;
    bool timings = false;
};

int verdict_code(Verdict v) {
    switch (v) {
        case Verdict::Verified: return kOk;
        case Verdict::Counterexample:
        case Verdict::HypothesisViolated: return kFailed;
        case Verdict::BudgetExceeded: return kBudgetExceeded;
    }
    return kInternalError;
}

// Failures outrank budget overruns.
int combine(int a, int b) {
    if (a == kFailed || b == kFailed) return kFailed;
    return std::max(a, b);
}

int verify_fuzz(const VerifyArgs& a, std::ostream& out) {
    const LemmaId id = parse_lemma(a.lemma);
    const CampaignSummary s = fuzz_campaign(id, a.fuzz, a.seed, a.max_n, default_budget(a.common));
    int code = kOk;
    for (const auto& f : s.failures) code = combine(code, verdict_code(f.verdict));
    if (a.common.json()) {
        out << io::dump(io::campaign_summary_to_json(s, a.timings));
        return code;
    }
    out << lemma_name(id) << ": " << s.runs << " random configurations (seed " << a.seed << ", n <= " << a.max_n << ")\n";
    for (const auto& [v, count] : s.verdicts) out << "  " << verdict_name(v) << " " << count << "\n";
    for (const auto& f : s.failures) out << "  failure: " << f.summary << "\n";
    if (a.timings) out << "  " << std::fixed << std::setprecision(3) << s.seconds << " s\n";
    return code;
}

int verify(const VerifyArgs& a, std::ostream& out) {
    if (a.fuzz > 0) {
        if (a.lemma.empty()) throw InputError("--fuzz needs --lemma");
        return verify_fuzz(a, out);
    }
    std::vector<CheckConfig> configs;
    if (!a.file.empty()) {
        if (!a.lemma.empty()) throw InputError("give either a campaign file or --lemma, not both");
        configs = io::campaign_from_json(io::load_file(a.file));
        for (auto& c : configs) c.control = c.control || a.control;
    } else {
        if (a.lemma.empty()) throw InputError("verify needs a campaign file or --lemma");
        if (!a.n) throw InputError("--lemma needs --n");
        CheckConfig c;
        c.lemma = parse_lemma(a.lemma);
        c.modulus = *a.n;
        c.indices = a.seq;
        c.extra = a.extra;
        if (a.cutoff) c.cutoff = *a.cutoff;
        if (c.lemma == LemmaId::Lemma2 && !a.cutoff) c.cutoff = 1 + 2 * a.multiplicity.value_or(7);
        if (a.multiplicity) c.multiplicity = *a.multiplicity;
        c.control = a.control;
        configs.push_back(c);
    }
    const double budget = default_budget(a.common);
    for (auto& c : configs) {
        if (c.budget_seconds == 0) c.budget_seconds = budget;
    }

    int code = kOk;
    Json reports = Json::array();
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        const CheckConfig& c = configs[i];
        std::ostringstream row;
        row << std::setw(3) << i << "  " << std::left << std::setw(16) << lemma_name(c.lemma) << std::setw(9)
            << (c.control ? "control" : "") << std::right;
        if (a.common.dry_run) {
            const auto why = hypothesis_violation(c);
            Json r{{"config", io::check_config_to_json(c)}, {"hypotheses", why ? "violated" : "satisfied"}};
            if (why) {
                r["reason"] = *why;
                row << "hypothesis-violated  " << *why;
                code = combine(code, kFailed);
            } else {
                const CheckPlan plan = plan_check(c);
                r["plan"] = {{"generator_degrees", plan.generator_degrees},
                             {"target", plan.target},
                             {"target_free_dimension", plan.target_free_dimension},
                             {"fine_degrees", plan.fine_degrees},
                             {"free_dimension_up_to_cutoff", plan.free_dimension_up_to_cutoff}};
                row << "hypotheses hold  " << plan.fine_degrees << " fine degrees, free dimension "
                    << plan.free_dimension_up_to_cutoff;
                if (!plan.target.empty()) row << ", target " << plan.target << " of dimension " << plan.target_free_dimension;
            }
            reports.push_back(r);
        } else {
            const CheckReport r = run_check(c);
            Json rj = io::report_to_json(r, a.timings);
            rj["config"] = io::check_config_to_json(c);
            reports.push_back(rj);
            code = combine(code, verdict_code(r.verdict));
            row << std::left << std::setw(21) << verdict_name(r.verdict) << std::right;
            if (a.timings) row << std::fixed << std::setprecision(3) << std::setw(9) << r.seconds << " s  ";
            row << r.summary;
            if (r.witness) row << "\n     witness at " << r.witness_degree;
        }
        rows.push_back(row.str());
    }
    if (a.common.json()) {
        out << io::dump(Json{{"version", kVersion}, {"dry_run", a.common.dry_run}, {"reports", reports}});
    } else {
        for (const auto& r : rows) out << r << "\n";
    }
    return code;
}

// ---------------------------------------------------------------- constants

struct ConstantsArgs {
    Common common;
    uint64_t f1 = 3;
    bool exact = false;
};

int constants(const ConstantsArgs& a, std::ostream& out) {
    const BoundConstants c = bound_constants(a.f1);
    if (a.common.json()) {
        out << io::dump(io::constants_to_json(c, a.exact));
        return kOk;
    }
    out << "D~ size bound          " << c.dtilde_max << "\n";
    out << "initial segment bound  " << c.u_max << "\n";
    out << "component bound e      " << c.e_bound.str() << " (" << c.e_bound.decimal_digits() << " digits";
    if (a.exact) out << ", exact count " << c.e_bound.exact_decimal_digits();
    out << ")\n";
    out << "f1                     " << c.f1 << "\n";
    out << "derived length bound   " << c.final_length << "\n";
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graded Lie algebra toolkit: index combinatorics, graded quotients, lemma verification"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    DepsArgs deps_args;
    auto* deps_cmd = app.add_subcommand("deps", "(-1)-dependence, D and D~ of an index sequence");
    add_common(deps_cmd, deps_args.common, false, false);
    deps_cmd->add_option("--n", deps_args.n, "Odd modulus")->required();
    deps_cmd->add_option("--seq", deps_args.seq, "Comma-separated residues")->required()->delimiter(',');

    BuildArgs build_args;
    auto* build_cmd = app.add_subcommand("build", "Component dimensions of a presentation's quotient");
    add_common(build_cmd, build_args.common, true, true);
    build_cmd->add_option("presentation", build_args.file, "Presentation JSON file")->required();
    build_cmd->add_option("--cutoff", build_args.cutoff, "Override the presentation's cutoff");
    build_cmd->add_flag("--derived", build_args.derived, "Also compute the derived length");

    DecomposeArgs decompose_args;
    auto* decompose_cmd = app.add_subcommand("decompose", "Eigenspace grading of a structure-constant algebra");
    add_common(decompose_cmd, decompose_args.common, false, false);
    decompose_cmd->add_option("algebra", decompose_args.file, "Algebra JSON file")->required();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Run lemma checks from a campaign file or flags");
    add_common(verify_cmd, verify_args.common, true, true);
    verify_cmd->add_option("campaign", verify_args.file, "Campaign JSON file (array of check configs)");
    verify_cmd->add_option("--lemma", verify_args.lemma, "lemma1, lemma2, lemma3, span-form, component-bound, proposition");
    verify_cmd->add_option("--n", verify_args.n, "Odd modulus");
    verify_cmd->add_option("--seq", verify_args.seq, "Indices, comma-separated")->delimiter(',');
    verify_cmd->add_option("--extra", verify_args.extra, "Extra values (b for lemma1, extra generator degrees)")->delimiter(',');
    verify_cmd->add_option("--cutoff", verify_args.cutoff, "Length cutoff");
    verify_cmd->add_option("--multiplicity", verify_args.multiplicity, "Number of x_a factors (lemma2)");
    verify_cmd->add_flag("--control", verify_args.control, "Run the weakened twin of each check");
    verify_cmd->add_option("--fuzz", verify_args.fuzz, "Run this many random valid configurations")->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--seed", verify_args.seed, "Seed for --fuzz");
    verify_cmd->add_option("--max-n", verify_args.max_n, "Largest modulus for --fuzz");
    verify_cmd->add_flag("--timings", verify_args.timings, "Include wall time in reports");

    ConstantsArgs constants_args;
    auto* constants_cmd = app.add_subcommand("constants", "Explicit constants of the derived-length bound");
    add_common(constants_cmd, constants_args.common, false, false);
    constants_cmd->add_option("--f1", constants_args.f1, "Derived length of the few-components quotient");
    constants_cmd->add_flag("--exact-digits", constants_args.exact, "Also count digits exactly (slow)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Help and version requests arrive here with exit code 0.
        return app.exit(e, out, err) == 0 ? kOk : kInvalidInput;
    }

    try {
        if (*deps_cmd) return deps(deps_args, out);
        if (*build_cmd) return build(build_args, out);
        if (*decompose_cmd) return decompose(decompose_args, out);
        if (*verify_cmd) return verify(verify_args, out);
        if (*constants_cmd) return constants(constants_args, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternalError;
    }
    return kInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"gradedlie"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gradedlie::cli
