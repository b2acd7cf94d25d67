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

#include "gradedlie/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "gradedlie/errors.hpp"
#include "gradedlie/zn.hpp"

namespace gradedlie {

const char* lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::Lemma1: return "lemma1";
        case LemmaId::Lemma2: return "lemma2";
        case LemmaId::Lemma3: return "lemma3";
        case LemmaId::SpanForm: return "span-form";
        case LemmaId::ComponentBound: return "component-bound";
        case LemmaId::Proposition: return "proposition";
    }
    return "?";
}

LemmaId parse_lemma(std::string_view name) {
    for (auto id : {LemmaId::Lemma1, LemmaId::Lemma2, LemmaId::Lemma3, LemmaId::SpanForm, LemmaId::ComponentBound,
                    LemmaId::Proposition}) {
        if (name == lemma_name(id)) return id;
    }
    throw InputError("unknown lemma '" + std::string(name) + "'");
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Verified: return "verified";
        case Verdict::Counterexample: return "counterexample";
        case Verdict::HypothesisViolated: return "hypothesis-violated";
        case Verdict::BudgetExceeded: return "budget-exceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Run {
    CheckReport report;
    std::unique_ptr<QuotientAlgebra> algebra;
    Deadline deadline;

    QuotientAlgebra& build(GradedPresentation p) {
        algebra = std::make_unique<QuotientAlgebra>(std::move(p));
        algebra->set_deadline(deadline);
        return *algebra;
    }

    void violated(std::string why) {
        report.verdict = Verdict::HypothesisViolated;
        report.summary = std::move(why);
    }

    void counterexample(const FineDegree& key, LieElement witness, std::string why) {
        report.verdict = Verdict::Counterexample;
        report.summary = std::move(why);
        report.witness_degree = key.str(algebra->presentation().generators());
        report.witness = std::move(witness);
        report.presentation = algebra->presentation();
    }
};

CheckReport guarded(const CheckConfig& cfg, LemmaId id, const std::function<void(Run&)>& body) {
    zn::require_odd_modulus(cfg.modulus);
    if (cfg.cutoff < 1 || cfg.cutoff > 64) throw InputError("cutoff must lie in [1, 64]");
    if (cfg.budget_seconds < 0) throw InputError("budget must be nonnegative");
    Run run;
    run.report.lemma = id;
    run.report.control = cfg.control;
    if (cfg.budget_seconds > 0) run.deadline = Deadline::after_seconds(cfg.budget_seconds);
    const auto start = Clock::now();
    try {
        body(run);
    } catch (const BudgetExceeded& e) {
        run.report.verdict = Verdict::BudgetExceeded;
        run.report.summary = e.what();
        run.report.witness.reset();
    }
    if (run.algebra) {
        const auto st = run.algebra->stats();
        run.report.statistics["components"] = static_cast<long long>(st.components);
        run.report.statistics["full_components"] = static_cast<long long>(st.full_components);
        run.report.statistics["relator_brackets"] = static_cast<long long>(st.relator_brackets);
        run.report.statistics["closure_brackets"] = static_cast<long long>(st.closure_brackets);
    }
    run.report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return run.report;
}

void require_count(const CheckConfig& cfg, std::size_t count, const char* what) {
    if (cfg.indices.size() != count) {
        throw InputError(std::string(lemma_name(cfg.lemma)) + " takes " + std::to_string(count) + " indices (" +
                         what + ")");
    }
}

long long reduce_mod(long long v, long long n) { return ((v % n) + n) % n; }

std::vector<RelatorFamily> standard_families() {
    return {RelatorFamily::zero_component_kill(), RelatorFamily::selective_metabelian()};
}

// Hypotheses shared by Lemma 1 and the span checks: (d1,d2,d3) independent, d4 in D(d1,d2,d3).
std::optional<std::string> quadruple_violation(long long n, const std::vector<long long>& d) {
    const zn::IndexSequence head(n, {d[0], d[1], d[2]});
    if (!head.all_nonzero()) return "indices must be nonzero (degree-0 components vanish)";
    if (zn::is_minus_one_dependent(head)) return "(" + head.str() + ") is (-1)-dependent";
    if (!zn::dependency_set(head).contains(zn::Residue(d[3], n)) || reduce_mod(d[3], n) == 0) {
        return std::to_string(reduce_mod(d[3], n)) + " is not a nonzero element of D(" + head.str() + ")";
    }
    return std::nullopt;
}

std::vector<SparseVector> reps_of(QuotientAlgebra& q, const FineDegree& key) {
    std::vector<SparseVector> out;
    for (uint32_t c : q.component(key).quotient_basis) out.push_back(unit_vector(c));
    return out;
}

// Fine degrees of length in [2, max_length] with nonzero quotient component.
std::vector<FineDegree> derived_degrees(QuotientAlgebra& q, int max_length) {
    std::vector<FineDegree> out;
    if (max_length < 2) return out;
    for (const auto& k : q.fine_degrees_up_to(max_length)) {
        if (k.length() >= 2 && q.quotient_dimension(k) > 0) out.push_back(k);
    }
    return out;
}

// First row of `inner` (in fine-degree order) outside `outer`.
std::optional<std::pair<FineDegree, SparseVector>> first_escape(
    const std::map<FineDegree, RowSpace>& inner, const std::function<bool(const FineDegree&, const SparseVector&)>& in_outer) {
    for (const auto& [key, rows] : inner) {
        for (const auto& row : rows.basis()) {
            if (!in_outer(key, row)) return std::make_pair(key, row);
        }
    }
    return std::nullopt;
}

std::set<int> residue_values(const zn::ResidueSet& s) {
    std::set<int> out;
    for (const auto& r : s) out.insert(r.value());
    return out;
}

std::string join(const std::set<int>& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s) {
        os << (first ? "" : ", ") << v;
        first = false;
    }
    os << '}';
    return os.str();
}

struct QuadrupleSetup {
    LieElement u;
    FineDegree key;
    std::set<int> dtilde;
};

GradedPresentation quadruple_presentation(const CheckConfig& cfg) {
    std::vector<Generator> gens;
    for (int i = 0; i < 4; ++i) gens.push_back({"u" + std::to_string(i + 1), cfg.indices[i]});
    for (std::size_t i = 0; i < cfg.extra.size(); ++i) gens.push_back({"v" + std::to_string(i + 1), cfg.extra[i]});
    return GradedPresentation(cfg.modulus, std::move(gens), standard_families(), cfg.cutoff);
}

std::optional<std::string> span_violation(const CheckConfig& cfg) {
    require_count(cfg, 4, "d1, d2, d3, d4");
    if (auto why = quadruple_violation(cfg.modulus, cfg.indices)) return why;
    for (long long e : cfg.extra) {
        if (reduce_mod(e, cfg.modulus) == 0) return "extra generator degrees must be nonzero";
    }
    if (cfg.cutoff < 6) return "cutoff must be at least 6";
    return std::nullopt;
}

QuadrupleSetup quadruple_setup(Run& run, const CheckConfig& cfg) {
    QuotientAlgebra& q = run.build(quadruple_presentation(cfg));
    FreeLieAlgebra& f = q.free_algebra();
    QuadrupleSetup s;
    s.u = f.bracket(f.bracket(f.generator("u1"), f.generator("u2")), f.bracket(f.generator("u3"), f.generator("u4")));
    s.key = *s.u.fine_degree(f.rank());
    s.dtilde = residue_values(zn::dtilde_set(zn::IndexSequence(cfg.modulus, cfg.indices)));
    return s;
}

std::vector<Generator> numbered_generators(const std::vector<long long>& degrees) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < degrees.size(); ++i) gens.push_back({"g" + std::to_string(i + 1), degrees[i]});
    return gens;
}

std::optional<std::string> nonzero_degrees(const CheckConfig& cfg, const char* what) {
    if (cfg.indices.empty()) throw InputError(std::string(what) + " needs at least one generator degree");
    for (long long d : cfg.indices) {
        if (reduce_mod(d, cfg.modulus) == 0) return "generator degrees must be nonzero (degree-0 components vanish)";
    }
    return std::nullopt;
}

// Values of b a Lemma 1 config asks for; every admissible b when none are given.
std::vector<long long> lemma1_values_of_b(const CheckConfig& cfg) {
    const long long n = cfg.modulus;
    const auto dt = residue_values(zn::dtilde_set(zn::IndexSequence(n, cfg.indices)));
    std::vector<long long> bs;
    if (cfg.extra.empty()) {
        for (int b = 1; b < n; ++b) {
            if (!dt.contains(b)) bs.push_back(b);
        }
    } else {
        for (long long b : cfg.extra) bs.push_back(reduce_mod(b, n));
    }
    return bs;
}

}  // namespace

std::optional<std::string> hypothesis_violation(const CheckConfig& cfg) {
    zn::require_odd_modulus(cfg.modulus);
    const long long n = cfg.modulus;
    switch (cfg.lemma) {
        case LemmaId::Lemma1: {
            require_count(cfg, 4, "a1, a2, a3, a4");
            if (auto why = quadruple_violation(n, cfg.indices)) return why;
            if (cfg.cutoff < 5) return "cutoff must be at least 5";
            const auto dt = residue_values(zn::dtilde_set(zn::IndexSequence(n, cfg.indices)));
            const auto bs = lemma1_values_of_b(cfg);
            if (bs.empty()) return "no admissible b: D~ covers Z/" + std::to_string(n);
            for (long long b : bs) {
                if (dt.contains(static_cast<int>(b))) return "b = " + std::to_string(b) + " lies in D~";
            }
            return std::nullopt;
        }
        case LemmaId::Lemma2: {
            require_count(cfg, 3, "a, b, c");
            if (cfg.multiplicity < 1 || cfg.multiplicity > 31) throw InputError("multiplicity must lie in [1, 31]");
            const zn::Residue a(cfg.indices[0], n), b(cfg.indices[1], n), c(cfg.indices[2], n);
            const int order = zn::residue_order(a);
            if (order <= 3) return "o(a) = " + std::to_string(order) + " is not greater than 3";
            if (b.is_zero() || (a - b).is_zero() || c.is_zero()) {
                return "b, a - b and c must be nonzero (degree-0 components vanish)";
            }
            const int length = 1 + 2 * cfg.multiplicity;
            if (cfg.cutoff < length) {
                return "cutoff " + std::to_string(cfg.cutoff) + " is below the product length " + std::to_string(length);
            }
            return std::nullopt;
        }
        case LemmaId::Lemma3:
            if (auto why = nonzero_degrees(cfg, "lemma3")) return why;
            if (cfg.cutoff < 4) return "cutoff must be at least 4";
            return std::nullopt;
        case LemmaId::SpanForm:
        case LemmaId::ComponentBound:
            return span_violation(cfg);
        case LemmaId::Proposition:
            if (auto why = nonzero_degrees(cfg, "proposition")) return why;
            if (cfg.cutoff < 6) return "cutoff must be at least 6";
            return std::nullopt;
    }
    throw InputError("unknown lemma");
}

CheckPlan plan_check(const CheckConfig& cfg) {
    if (auto why = hypothesis_violation(cfg)) throw InputError("hypotheses fail: " + *why);
    CheckPlan plan;
    std::optional<FineDegree> target;
    switch (cfg.lemma) {
        case LemmaId::Lemma1:
            plan.generator_degrees = cfg.indices;
            plan.generator_degrees.push_back(lemma1_values_of_b(cfg).front());
            target = FineDegree(std::vector<uint8_t>(5, 1));
            break;
        case LemmaId::Lemma2: {
            const long long n = cfg.modulus;
            plan.generator_degrees = {reduce_mod(cfg.indices[2], n), reduce_mod(cfg.indices[1], n),
                                      reduce_mod(cfg.indices[0] - cfg.indices[1], n)};
            const auto m = static_cast<uint8_t>(cfg.multiplicity);
            target = FineDegree(std::vector<uint8_t>{1, m, m});
            break;
        }
        case LemmaId::SpanForm:
        case LemmaId::ComponentBound:
            plan.generator_degrees = cfg.indices;
            plan.generator_degrees.insert(plan.generator_degrees.end(), cfg.extra.begin(), cfg.extra.end());
            break;
        case LemmaId::Lemma3:
        case LemmaId::Proposition:
            plan.generator_degrees = cfg.indices;
            break;
    }
    const std::size_t rank = plan.generator_degrees.size();
    if (target) {
        plan.target_free_dimension = witt_dimension(*target);
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < rank; ++i) os << (i ? "," : "") << int((*target)[i]);
        os << ')';
        plan.target = os.str();
    }
    // Fine degrees of length 1..cutoff over `rank` letters, enumerated as counts vectors.
    std::vector<uint8_t> counts(rank, 0);
    while (true) {
        std::size_t i = 0;
        int length = 0;
        for (auto c : counts) length += c;
        while (i < rank && (counts[i] == cfg.cutoff || length >= cfg.cutoff)) {
            length -= counts[i];
            counts[i++] = 0;
        }
        if (i == rank) break;
        ++counts[i];
        ++plan.fine_degrees;
        const uint64_t d = witt_dimension(FineDegree(counts));
        plan.free_dimension_up_to_cutoff = d > UINT64_MAX - plan.free_dimension_up_to_cutoff
                                               ? UINT64_MAX
                                               : plan.free_dimension_up_to_cutoff + d;
    }
    return plan;
}

CheckReport check_lemma1(const CheckConfig& cfg) {
    return guarded(cfg, LemmaId::Lemma1, [&](Run& run) {
        if (auto why = hypothesis_violation(cfg)) return run.violated(*why);
        const long long n = cfg.modulus;
        const std::vector<long long> bs = lemma1_values_of_b(cfg);
        // Without the selective metabelian relators the product generally survives.
        std::vector<RelatorFamily> families = standard_families();
        if (cfg.control) families.pop_back();
        long long checked = 0;
        for (long long b : bs) {
            std::vector<Generator> gens;
            for (int i = 0; i < 4; ++i) gens.push_back({"x" + std::to_string(i + 1), cfg.indices[i]});
            gens.push_back({"xb", b});
            QuotientAlgebra& q = run.build(GradedPresentation(n, std::move(gens), families, cfg.cutoff));
            FreeLieAlgebra& f = q.free_algebra();
            LieElement prod = f.bracket(
                f.bracket(f.bracket(f.generator("x1"), f.generator("x2")), f.bracket(f.generator("x3"), f.generator("x4"))),
                f.generator("xb"));
            const FineDegree key = *prod.fine_degree(f.rank());
            run.report.statistics["free_dimension"] = static_cast<long long>(f.dimension(key));
            run.report.statistics["quotient_dimension"] = static_cast<long long>(q.quotient_dimension(key));
            ++checked;
            run.report.statistics["b_checked"] = checked;
            if (!q.is_zero(prod)) {
                return run.counterexample(key, prod, "[[x1,x2],[x3,x4],xb] is nonzero for b = " + std::to_string(b));
            }
        }
        run.report.summary = "[[x1,x2],[x3,x4],xb] = 0 for " + std::to_string(checked) + " admissible b";
    });
}

CheckReport check_lemma2(const CheckConfig& cfg) {
    return guarded(cfg, LemmaId::Lemma2, [&](Run& run) {
        if (auto why = hypothesis_violation(cfg)) return run.violated(*why);
        const long long n = cfg.modulus;
        const int mult = cfg.multiplicity;
        const zn::Residue a(cfg.indices[0], n), b(cfg.indices[1], n), c(cfg.indices[2], n);
        // Either family alone already kills the full-multiplicity product for some
        // configurations, so the weakened twin drops both.
        std::vector<RelatorFamily> families;
        if (!cfg.control) families = standard_families();
        GradedPresentation p(n, {{"x_c", c.value()}, {"x_b", b.value()}, {"x_ab", (a - b).value()}}, families,
                             cfg.cutoff);
        QuotientAlgebra& q = run.build(p);
        auto product = [&](FreeLieAlgebra& f) {
            const LieElement xa = f.bracket(f.generator("x_b"), f.generator("x_ab"));
            LieElement prod = f.generator("x_c");
            for (int i = 0; i < mult; ++i) prod = f.bracket(prod, xa);
            return prod;
        };
        FreeLieAlgebra& f = q.free_algebra();
        const LieElement prod = product(f);
        const FineDegree key = *prod.fine_degree(f.rank());
        const std::string what = "[x_c, x_a x" + std::to_string(mult) + "]";
        run.report.statistics["free_dimension"] = static_cast<long long>(f.dimension(key));
        run.report.statistics["quotient_dimension"] = static_cast<long long>(q.quotient_dimension(key));
        const bool zero = q.is_zero(prod);
        run.report.statistics["product_zero"] = zero ? 1 : 0;
        if (mult >= 7) {
            if (!zero) return run.counterexample(key, prod, what + " is nonzero");
            run.report.summary = what + " = 0 in fine degree " + key.str(p.generators());
            return;
        }
        // Below multiplicity 7 the lemma asserts nothing. The smoke run instead
        // recomputes the component without the dead-component shortcut and
        // requires both eliminations to agree.
        QuotientAlgebra slow(p, QuotientOptions{false});
        slow.set_deadline(run.deadline);
        const bool slow_zero = slow.is_zero(product(slow.free_algebra()));
        run.report.notes.push_back("multiplicity " + std::to_string(mult) + " is below 7; the lemma makes no claim");
        if (slow_zero != zero) {
            run.report.verdict = Verdict::Counterexample;
            run.report.summary = what + ": elimination routes disagree";
            if (!zero) {
                run.report.witness = prod;
                run.report.presentation = p;
                run.report.witness_degree = key.str(p.generators());
            }
            return;
        }
        run.report.summary = what + (zero ? " = 0" : " != 0") + " in fine degree " + key.str(p.generators()) +
                             "; both elimination routes agree";
    });
}

CheckReport check_lemma3(const CheckConfig& cfg) {
    return guarded(cfg, LemmaId::Lemma3, [&](Run& run) {
        if (auto why = hypothesis_violation(cfg)) return run.violated(*why);
        std::vector<Generator> gens = numbered_generators(cfg.indices);
        std::vector<RelatorFamily> families;
        if (!cfg.control) families = {RelatorFamily::zero_component_kill(), RelatorFamily::select_second()};
        QuotientAlgebra& q = run.build(GradedPresentation(cfg.modulus, std::move(gens), families, cfg.cutoff));
        const auto series = q.derived_series(2);
        run.report.statistics["derived_1_dimension"] = static_cast<long long>(series[0].total_dimension());
        run.report.statistics["derived_2_dimension"] = static_cast<long long>(series[1].total_dimension());
        if (!series[1].is_zero()) {
            const auto& [key, rows] = *series[1].components.begin();
            return run.counterexample(key, q.free_algebra().element(key, rows.basis().front()),
                                      "L^(2) is nonzero at length " + std::to_string(key.length()));
        }
        const DerivedLength dl = q.derived_length();
        run.report.statistics["derived_length"] = dl.length;
        run.report.statistics["vacuity_threshold"] = dl.vacuity_threshold;
        run.report.summary = "L^(2) = 0 up to length " + std::to_string(cfg.cutoff) + "; derived length " +
                             std::to_string(dl.length) + (dl.informative() ? " (informative)" : " (vacuous)");
    });
}

CheckReport check_span_form(const CheckConfig& cfg) {
    return guarded(cfg, LemmaId::SpanForm, [&](Run& run) {
        if (auto why = hypothesis_violation(cfg)) return run.violated(*why);
        const QuadrupleSetup s = quadruple_setup(run, cfg);
        QuotientAlgebra& q = *run.algebra;
        const GeneratorSet& gens = q.presentation().generators();
        const int n = static_cast<int>(cfg.modulus);
        const IdealSnapshot ideal = q.ideal_generated({s.u}, Ambient::Derived, "ideal of M generated by U");
        run.report.statistics["ideal_dimension"] = static_cast<long long>(ideal.total_dimension());
        if (ideal.is_zero()) {
            run.report.summary = "U vanishes in the quotient; containment holds vacuously";
            return;
        }

        // Products [U, m_1, ..., m_v]: first factors of order > 3 in D~, then an order-3 tail.
        std::set<int> wide, narrow;
        for (int d : s.dtilde) {
            if (d == 0) continue;
            (zn::residue_order(zn::Residue(d, n)) > 3 ? wide : narrow).insert(d);
        }
        const auto m_keys = derived_degrees(q, cfg.cutoff - s.key.length());
        std::map<FineDegree, std::vector<SparseVector>> m_reps;
        for (const auto& k : m_keys) m_reps.emplace(k, reps_of(q, k));

        std::map<FineDegree, RowSpace> span;
        auto insert = [&](std::map<FineDegree, RowSpace>& into, const FineDegree& k, SparseVector v) {
            auto [it, fresh] = into.try_emplace(k, q.free_algebra().dimension(k));
            return it->second.insert(std::move(v));
        };
        auto extend = [&](const std::map<FineDegree, RowSpace>& frontier, const std::set<int>& allowed) {
            std::map<FineDegree, RowSpace> next;
            for (const auto& [k, rows] : frontier) {
                for (const auto& [mk, reps] : m_reps) {
                    if (k.length() + mk.length() > cfg.cutoff || !allowed.contains(mk.zn_degree(gens))) continue;
                    for (const auto& row : rows.basis()) {
                        for (const auto& r : reps) {
                            SparseVector v = q.bracket(k, row, mk, r);
                            if (v.empty()) continue;
                            insert(span, k + mk, v);
                            insert(next, k + mk, std::move(v));
                        }
                    }
                }
            }
            return next;
        };
        std::map<FineDegree, RowSpace> frontier;
        insert(frontier, s.key, q.reduce(s.key, q.free_algebra().coordinates(s.u, s.key)));
        insert(span, s.key, frontier.begin()->second.basis().front());
        // The weakened twin drops the order > 3 phase entirely.
        if (!cfg.control) {
            while (!frontier.empty()) frontier = extend(frontier, wide);
        }
        frontier = span;
        while (!frontier.empty()) frontier = extend(frontier, narrow);

        std::size_t span_dim = 0;
        for (const auto& [k, rows] : span) span_dim += rows.rank();
        run.report.statistics["span_dimension"] = static_cast<long long>(span_dim);
        run.report.statistics["span_components"] = static_cast<long long>(span.size());
        auto escape = first_escape(ideal.components, [&](const FineDegree& k, const SparseVector& row) {
            auto it = span.find(k);
            return it != span.end() && it->second.contains(row);
        });
        if (escape) {
            return run.counterexample(escape->first, q.free_algebra().element(escape->first, escape->second),
                                      "ideal element outside the constrained span at " + escape->first.str(gens));
        }
        run.report.summary = "ideal of M generated by U (dimension " + std::to_string(ideal.total_dimension()) +
                             ") lies in the constrained span";
    });
}

CheckReport check_component_bound(const CheckConfig& cfg) {
    return guarded(cfg, LemmaId::ComponentBound, [&](Run& run) {
        if (auto why = hypothesis_violation(cfg)) return run.violated(*why);
        const QuadrupleSetup s = quadruple_setup(run, cfg);
        QuotientAlgebra& q = *run.algebra;
        const int n = static_cast<int>(cfg.modulus);
        const IdealSnapshot t = q.ideal_generated({s.u}, Ambient::Derived, "T");
        const CentralizerCensus census = q.centralizer_census(t);

        // Each factor of M costs length >= 2, so at most this many factors fit.
        const int factors = (cfg.cutoff - s.key.length()) / 2;
        const int wide_factors = cfg.control ? 0 : factors;
        std::set<int> wide, narrow;
        for (int d : s.dtilde) {
            if (d == 0) continue;
            (zn::residue_order(zn::Residue(d, n)) > 3 ? wide : narrow).insert(d);
        }
        const int base = static_cast<int>(reduce_mod(cfg.indices[0] + cfg.indices[1] + cfg.indices[2] + cfg.indices[3], n));
        std::set<std::pair<int, int>> states{{base, 0}}, all = states;
        for (int step = 0; step < wide_factors; ++step) {
            std::set<std::pair<int, int>> next;
            for (auto [sum, used] : states) {
                for (int d : wide) next.insert({(sum + d) % n, used + 1});
            }
            states = next;
            all.insert(next.begin(), next.end());
        }
        states = all;
        for (int step = 0; step < factors; ++step) {
            std::set<std::pair<int, int>> next;
            for (auto [sum, used] : states) {
                if (used >= factors) continue;
                for (int d : narrow) next.insert({(sum + d) % n, used + 1});
            }
            states = next;
            all.insert(next.begin(), next.end());
        }
        std::set<int> predicted;
        for (auto [sum, used] : all) predicted.insert(sum);

        const auto nt = static_cast<long long>(census.nontrivial.size());
        const auto nc = static_cast<long long>(census.noncentralizing.size());
        run.report.statistics["nontrivial_components"] = nt;
        run.report.statistics["noncentralizing_components"] = nc;
        run.report.statistics["predicted_components"] = static_cast<long long>(predicted.size());
        run.report.notes.push_back("nontrivial " + join(census.nontrivial));
        run.report.notes.push_back("noncentralizing " + join(census.noncentralizing));
        for (const auto& [key, rows] : t.components) {
            const int d = key.zn_degree(q.presentation().generators());
            if (!predicted.contains(d)) {
                return run.counterexample(key, q.free_algebra().element(key, rows.basis().front()),
                                          "T has a nonzero component in unpredicted degree " + std::to_string(d));
            }
        }
        if (nc > nt * nt) {
            run.report.verdict = Verdict::Counterexample;
            run.report.summary = "centralizer inequality fails: " + std::to_string(nc) + " > " + std::to_string(nt) + "^2";
            return;
        }
        run.report.summary = std::to_string(nt) + " nontrivial components, all predicted; " + std::to_string(nc) +
                             " noncentralizing <= " + std::to_string(nt * nt);
    });
}

CheckReport check_proposition(const CheckConfig& cfg) {
    return guarded(cfg, LemmaId::Proposition, [&](Run& run) {
        if (auto why = hypothesis_violation(cfg)) return run.violated(*why);
        std::vector<Generator> gens = numbered_generators(cfg.indices);
        QuotientAlgebra& q = run.build(GradedPresentation(cfg.modulus, std::move(gens), standard_families(), cfg.cutoff));
        const GeneratorSet& g = q.presentation().generators();
        const int n = static_cast<int>(cfg.modulus);
        FreeLieAlgebra& f = q.free_algebra();

        // Inner brackets [M_K1, M_K2], grouped by (K1, K2).
        const auto m_keys = derived_degrees(q, cfg.cutoff - 4);
        struct Inner {
            FineDegree left, right, sum;
            std::vector<SparseVector> rows;
        };
        std::vector<Inner> inners;
        for (const auto& k1 : m_keys) {
            for (const auto& k2 : m_keys) {
                if (k1.length() + k2.length() > cfg.cutoff - 2) continue;
                Inner in{k1, k2, k1 + k2, {}};
                RowSpace span(f.dimension(in.sum));
                for (const auto& a : reps_of(q, k1)) {
                    for (const auto& b : reps_of(q, k2)) span.insert(q.bracket(k1, a, k2, b));
                }
                in.rows = span.basis();
                if (!in.rows.empty()) inners.push_back(std::move(in));
            }
        }
        std::map<FineDegree, RowSpace> seed_rows;
        if (!cfg.control) {
            for (const auto& l : inners) {
                for (const auto& r : inners) {
                    if (l.sum.length() + r.sum.length() > cfg.cutoff) continue;
                    const int i[4] = {l.left.zn_degree(g), l.right.zn_degree(g), r.left.zn_degree(g),
                                      r.right.zn_degree(g)};
                    if (zn::minus_one_dependent(std::span<const int>(i, 3), n) ||
                        !zn::minus_one_dependent(std::span<const int>(i, 4), n)) {
                        continue;
                    }
                    const FineDegree key = l.sum + r.sum;
                    auto [it, fresh] = seed_rows.try_emplace(key, f.dimension(key));
                    for (const auto& x : l.rows) {
                        for (const auto& y : r.rows) it->second.insert(q.bracket(l.sum, x, r.sum, y));
                    }
                }
            }
        }
        std::vector<LieElement> seeds;
        for (const auto& [key, rows] : seed_rows) {
            for (const auto& row : rows.basis()) seeds.push_back(f.element(key, row));
        }
        const IdealSnapshot j = q.ideal_generated(seeds, Ambient::Derived, cfg.control ? "zero" : "J");
        const auto series = q.derived_series(3);
        const IdealSnapshot& l3 = series[2];
        const DerivedLength dl = q.derived_length();
        run.report.statistics["seed_count"] = static_cast<long long>(seeds.size());
        run.report.statistics["j_dimension"] = static_cast<long long>(j.total_dimension());
        run.report.statistics["derived_3_dimension"] = static_cast<long long>(l3.total_dimension());
        run.report.statistics["derived_length"] = dl.length;
        run.report.statistics["vacuity_threshold"] = dl.vacuity_threshold;
        auto escape = first_escape(l3.components, [&](const FineDegree& k, const SparseVector& row) {
            auto it = j.components.find(k);
            return it != j.components.end() && it->second.contains(row);
        });
        if (escape) {
            return run.counterexample(escape->first, f.element(escape->first, escape->second),
                                      "L^(3) element outside J at " + escape->first.str(g));
        }
        const std::string length = "derived length " + std::to_string(dl.length) + " (vacuity threshold " +
                                   std::to_string(dl.vacuity_threshold) + ")";
        if (l3.is_zero()) {
            run.report.notes.push_back("vacuous: L^(3) = 0 up to length " + std::to_string(cfg.cutoff));
            run.report.summary = "L^(3) = 0 within the cutoff, containment is vacuous; " + length;
        } else {
            run.report.summary = "L^(3) (dimension " + std::to_string(l3.total_dimension()) + ") lies in J; " + length;
        }
    });
}

CheckReport run_check(const CheckConfig& cfg) {
    switch (cfg.lemma) {
        case LemmaId::Lemma1: return check_lemma1(cfg);
        case LemmaId::Lemma2: return check_lemma2(cfg);
        case LemmaId::Lemma3: return check_lemma3(cfg);
        case LemmaId::SpanForm: return check_span_form(cfg);
        case LemmaId::ComponentBound: return check_component_bound(cfg);
        case LemmaId::Proposition: return check_proposition(cfg);
    }
    throw InputError("unknown lemma");
}

CheckConfig random_config(LemmaId lemma, uint64_t seed, long long max_modulus) {
    if (max_modulus < 5) throw InputError("max modulus must be at least 5");
    std::mt19937_64 rng(seed);
    auto uniform = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng); };
    auto odd_modulus = [&](long long lo) {
        const long long hi = (max_modulus - 1) / 2;
        return 2 * uniform(std::min(lo / 2, hi), hi) + 1;
    };
    CheckConfig cfg;
    cfg.lemma = lemma;
    switch (lemma) {
        case LemmaId::Lemma1:
        case LemmaId::SpanForm:
        case LemmaId::ComponentBound: {
            for (int attempt = 0;; ++attempt) {
                if (attempt > 10000) throw InputError("no admissible configuration below the modulus bound");
                const long long n = odd_modulus(lemma == LemmaId::Lemma1 ? 17 : 11);
                std::vector<long long> d{uniform(1, n - 1), uniform(1, n - 1), uniform(1, n - 1)};
                const zn::IndexSequence head(n, d);
                if (zn::is_minus_one_dependent(head)) continue;
                std::vector<long long> dep;
                for (const auto& r : zn::dependency_set(head)) {
                    if (!r.is_zero()) dep.push_back(r.value());
                }
                d.push_back(dep[static_cast<std::size_t>(uniform(0, static_cast<long long>(dep.size()) - 1))]);
                cfg.modulus = n;
                cfg.indices = d;
                if (lemma == LemmaId::Lemma1) {
                    const auto dt = residue_values(zn::dtilde_set(zn::IndexSequence(n, d)));
                    std::vector<long long> free_b;
                    for (int b = 1; b < n; ++b) {
                        if (!dt.contains(b)) free_b.push_back(b);
                    }
                    if (free_b.empty()) continue;
                    cfg.extra = {free_b[static_cast<std::size_t>(uniform(0, static_cast<long long>(free_b.size()) - 1))]};
                    cfg.cutoff = 5;
                } else {
                    // Two extra generators whose degrees together with those of [u1,u2] and
                    // [u3,u4] are dependent, so [U, [v1, v2]] is not itself a relator.
                    const long long e1 = uniform(1, n - 1);
                    const long long shift = uniform(0, 1) ? d[0] + d[1] : d[2] + d[3];
                    const long long e2 = reduce_mod(-shift - e1, n);
                    if (e2 == 0) continue;
                    cfg.extra = {e1, e2};
                    cfg.cutoff = 6;
                }
                return cfg;
            }
        }
        case LemmaId::Lemma2: {
            const long long n = odd_modulus(5);
            long long a;
            do {
                a = uniform(1, n - 1);
            } while (zn::residue_order(zn::Residue(a, n)) <= 3);
            long long b;
            do {
                b = uniform(1, n - 1);
            } while (b == a);
            cfg.modulus = n;
            cfg.indices = {a, b, uniform(1, n - 1)};
            cfg.multiplicity = 7;
            cfg.cutoff = 1 + 2 * cfg.multiplicity;
            return cfg;
        }
        case LemmaId::Lemma3:
        case LemmaId::Proposition: {
            cfg.modulus = odd_modulus(5);
            const long long count = uniform(2, 3);
            for (long long i = 0; i < count; ++i) cfg.indices.push_back(uniform(1, cfg.modulus - 1));
            cfg.cutoff = lemma == LemmaId::Lemma3 ? 6 : 8;
            return cfg;
        }
    }
    throw InputError("unknown lemma");
}

CampaignSummary fuzz_campaign(LemmaId lemma, int runs, uint64_t seed, long long max_modulus, double budget_per_check) {
    if (runs < 0) throw InputError("run count must be nonnegative");
    CampaignSummary out;
    out.lemma = lemma;
    const auto start = Clock::now();
    std::mt19937_64 seeds(seed);
    for (int i = 0; i < runs; ++i) {
        CheckConfig cfg = random_config(lemma, seeds(), max_modulus);
        cfg.budget_seconds = budget_per_check;
        CheckReport r = run_check(cfg);
        ++out.runs;
        ++out.verdicts[r.verdict];
        if (r.verdict == Verdict::Counterexample || r.verdict == Verdict::BudgetExceeded) {
            r.notes.push_back("config n=" + std::to_string(cfg.modulus));
            out.failures.push_back(std::move(r));
        }
    }
    out.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

}  // namespace gradedlie
