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

#include <doctest.h>

#include "gradedlie/errors.hpp"
#include "gradedlie/harness.hpp"
#include "gradedlie/zn.hpp"

using namespace gradedlie;

namespace {

CheckConfig config(LemmaId id, long long n, std::vector<long long> idx, int cutoff, std::vector<long long> extra = {}) {
    CheckConfig c;
    c.lemma = id;
    c.modulus = n;
    c.indices = std::move(idx);
    c.extra = std::move(extra);
    c.cutoff = cutoff;
    return c;
}

void require_replayable(const CheckReport& r) {
    REQUIRE(r.verdict == Verdict::Counterexample);
    REQUIRE(r.witness.has_value());
    REQUIRE(r.presentation.has_value());
    QuotientAlgebra fresh(*r.presentation);
    CHECK_FALSE(fresh.is_zero(*r.witness));
}

// Whether [[x1,x2],[x3,x4],xb] lies in the span of the literal relator
// instances at fine degree (1,1,1,1,1) closed under bracketing with generators.
bool lemma1_product_vanishes_literally(long long n, const std::vector<long long>& a, long long b) {
    std::vector<Generator> gens;
    for (int i = 0; i < 4; ++i) gens.push_back({"x" + std::to_string(i + 1), a[i]});
    gens.push_back({"xb", b});
    GradedPresentation p(n, gens, {RelatorFamily::zero_component_kill(), RelatorFamily::selective_metabelian()}, 5);
    QuotientAlgebra q(p);
    FreeLieAlgebra& f = q.free_algebra();
    const std::size_t rank = f.rank();
    const FineDegree top(std::vector<uint8_t>(rank, 1));
    auto relators = q.instantiate_relators(top);
    std::map<FineDegree, RowSpace> slices;
    for (const FineDegree& k : sub_degrees(top)) {
        RowSpace r(f.dimension(k));
        for (const auto& e : relators) {
            if (*e.fine_degree(rank) == k) r.insert(f.coordinates(e, k));
        }
        for (std::size_t g = 0; g < rank; ++g) {
            if (k[g] == 0 || k.length() < 2) continue;
            const FineDegree prev = k - FineDegree::unit(rank, g);
            for (const auto& row : slices.at(prev).basis()) {
                r.insert(f.bracket(prev, row, FineDegree::unit(rank, g), unit_vector(0)));
            }
        }
        slices.emplace(k, std::move(r));
    }
    const LieElement prod = f.bracket(
        f.bracket(f.bracket(f.generator("x1"), f.generator("x2")), f.bracket(f.generator("x3"), f.generator("x4"))),
        f.generator("xb"));
    return slices.at(top).contains(f.coordinates(prod, top));
}

}  // namespace

TEST_CASE("lemma1 at n=101 over every admissible b") {
    auto cfg = config(LemmaId::Lemma1, 101, {1, 2, 5, 98}, 5);
    auto r = check_lemma1(cfg);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.statistics.at("free_dimension") == 24);
    // 101 minus |D~| = 45 values, all within [-22, 22].
    CHECK(r.statistics.at("b_checked") == 56);

    cfg.extra = {40};
    CHECK(check_lemma1(cfg).verdict == Verdict::Verified);
}

TEST_CASE("lemma1 agrees with the literal relator closure") {
    for (long long b : {23LL, 40LL, 60LL}) {
        CAPTURE(b);
        CHECK(lemma1_product_vanishes_literally(101, {1, 2, 5, 98}, b));
    }
}

TEST_CASE("lemma1 hypothesis violations build no algebra") {
    auto cfg = config(LemmaId::Lemma1, 101, {1, 2, 5, 98}, 5, {0});
    auto r = check_lemma1(cfg);
    CHECK(r.verdict == Verdict::HypothesisViolated);
    CHECK(r.statistics.empty());

    auto small = config(LemmaId::Lemma1, 7, {1, 2, 3, 4}, 5);
    r = check_lemma1(small);
    CHECK(r.verdict == Verdict::HypothesisViolated);
    CHECK(r.summary.find("no admissible b") != std::string::npos);

    auto dependent = config(LemmaId::Lemma1, 101, {1, 2, 98, 5}, 5);  // 1 + 2 + 98 = 101
    CHECK(check_lemma1(dependent).verdict == Verdict::HypothesisViolated);
    auto outside = config(LemmaId::Lemma1, 101, {1, 2, 5, 40}, 5);  // 40 not in D(1,2,5)
    CHECK(check_lemma1(outside).verdict == Verdict::HypothesisViolated);
    auto short_cut = config(LemmaId::Lemma1, 101, {1, 2, 5, 98}, 4, {40});
    CHECK(check_lemma1(short_cut).verdict == Verdict::HypothesisViolated);
}

TEST_CASE("lemma1 control without selective relators fails") {
    auto cfg = config(LemmaId::Lemma1, 101, {1, 2, 5, 98}, 5, {40});
    cfg.control = true;
    require_replayable(check_lemma1(cfg));
}

TEST_CASE("lemma2 at full multiplicity") {
    auto cfg = config(LemmaId::Lemma2, 11, {1, 3, 2}, 15);
    auto r = check_lemma2(cfg);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.statistics.at("free_dimension") == 3432);
    CHECK(r.statistics.at("product_zero") == 1);

    cfg.control = true;
    require_replayable(check_lemma2(cfg));
}

TEST_CASE("lemma2 smoke variant and hypotheses") {
    auto smoke = config(LemmaId::Lemma2, 11, {1, 3, 2}, 7);
    smoke.multiplicity = 3;
    auto r = check_lemma2(smoke);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.statistics.at("product_zero") == 1);

    // Below multiplicity 7 a nonzero product is not a counterexample.
    auto one = config(LemmaId::Lemma2, 11, {1, 3, 2}, 3);
    one.multiplicity = 1;
    r = check_lemma2(one);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.statistics.at("product_zero") == 0);

    CHECK(check_lemma2(config(LemmaId::Lemma2, 9, {3, 1, 2}, 15)).verdict == Verdict::HypothesisViolated);
    CHECK(check_lemma2(config(LemmaId::Lemma2, 11, {1, 3, 2}, 14)).verdict == Verdict::HypothesisViolated);
    CHECK(check_lemma2(config(LemmaId::Lemma2, 11, {1, 1, 2}, 15)).verdict == Verdict::HypothesisViolated);
    CHECK_THROWS_AS(check_lemma2(config(LemmaId::Lemma2, 11, {1, 3}, 15)), InputError);
}

TEST_CASE("lemma3 reproductions") {
    for (auto [n, degs] : std::vector<std::pair<long long, std::vector<long long>>>{
             {7, {1, 2, 3}}, {5, {1, 2}}, {5, {1, 2, 3}}}) {
        CAPTURE(n);
        auto cfg = config(LemmaId::Lemma3, n, degs, 6);
        auto r = check_lemma3(cfg);
        CHECK(r.verdict == Verdict::Verified);
        CHECK(r.statistics.at("derived_2_dimension") == 0);
        CHECK(r.statistics.at("derived_length") == 2);
        CHECK(r.statistics.at("vacuity_threshold") == 3);

        cfg.control = true;
        r = check_lemma3(cfg);
        require_replayable(r);
        // Over two generators [L,L] has dimension 1 at length 2, so the shortest
        // nonzero element of L^(2) has length 5.
        CHECK(r.witness->fine_degree(degs.size())->length() == (degs.size() == 2 ? 5 : 4));
    }
    CHECK(check_lemma3(config(LemmaId::Lemma3, 7, {1, 2, 3}, 3)).verdict == Verdict::HypothesisViolated);
    CHECK(check_lemma3(config(LemmaId::Lemma3, 7, {1, 7}, 6)).verdict == Verdict::HypothesisViolated);
}

TEST_CASE("span form and component bound at n=101") {
    auto cfg = config(LemmaId::SpanForm, 101, {1, 2, 5, 98}, 6, {96, 100});
    auto r = check_span_form(cfg);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.statistics.at("ideal_dimension") == 2);

    cfg.control = true;
    require_replayable(check_span_form(cfg));

    cfg.control = false;
    cfg.lemma = LemmaId::ComponentBound;
    r = check_component_bound(cfg);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.notes.at(0) == "nontrivial {5, 100}");
    CHECK(r.statistics.at("noncentralizing_components") <=
          r.statistics.at("nontrivial_components") * r.statistics.at("nontrivial_components"));

    cfg.control = true;
    require_replayable(check_component_bound(cfg));
}

TEST_CASE("span form without extra generators is the single element U") {
    auto r = check_span_form(config(LemmaId::SpanForm, 101, {1, 2, 5, 98}, 6));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.statistics.at("ideal_dimension") == 1);
    CHECK(check_span_form(config(LemmaId::SpanForm, 101, {1, 2, 5, 98}, 5)).verdict == Verdict::HypothesisViolated);
    CHECK(check_component_bound(config(LemmaId::ComponentBound, 101, {1, 2, 5, 40}, 6)).verdict ==
          Verdict::HypothesisViolated);
}

TEST_CASE("proposition at n=7 is vacuous at desk scale") {
    auto cfg = config(LemmaId::Proposition, 7, {1, 2, 3}, 6);
    auto r = check_proposition(cfg);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.statistics.at("derived_3_dimension") == 0);
    CHECK(r.statistics.at("derived_length") == 3);
    CHECK(r.statistics.at("vacuity_threshold") == 3);
    REQUIRE_FALSE(r.notes.empty());
    CHECK(r.notes.back().rfind("vacuous", 0) == 0);

    cfg.control = true;
    CHECK(check_proposition(cfg).verdict == Verdict::Verified);

    // At cutoff 8 the derived length 3 sits below the threshold 4.
    cfg.control = false;
    cfg.cutoff = 8;
    r = check_proposition(cfg);
    CHECK(r.statistics.at("derived_length") == 3);
    CHECK(r.statistics.at("vacuity_threshold") == 4);
}

TEST_CASE("reports are deterministic") {
    for (auto cfg : {config(LemmaId::SpanForm, 101, {1, 2, 5, 98}, 6, {96, 100}),
                     config(LemmaId::Lemma3, 7, {1, 2, 3}, 6)}) {
        auto a = run_check(cfg);
        auto b = run_check(cfg);
        CHECK(a.verdict == b.verdict);
        CHECK(a.summary == b.summary);
        CHECK(a.statistics == b.statistics);
        CHECK(a.notes == b.notes);
    }
}

TEST_CASE("budget overrun is reported, not thrown") {
    auto cfg = config(LemmaId::Lemma2, 11, {1, 3, 2}, 15);
    cfg.budget_seconds = 1e-9;
    auto r = run_check(cfg);
    CHECK(r.verdict == Verdict::BudgetExceeded);
    CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("malformed configs throw") {
    CHECK_THROWS_AS(run_check(config(LemmaId::Lemma3, 8, {1, 2}, 6)), InputError);
    CHECK_THROWS_AS(run_check(config(LemmaId::SpanForm, 101, {1, 2, 5}, 6)), InputError);
    CHECK_THROWS_AS(parse_lemma("lemma9"), InputError);
    CHECK(parse_lemma("component-bound") == LemmaId::ComponentBound);
}

TEST_CASE("random configs satisfy their hypotheses") {
    for (auto id : {LemmaId::Lemma1, LemmaId::Lemma2, LemmaId::SpanForm, LemmaId::Proposition}) {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            auto cfg = random_config(id, seed, 41);
            CHECK(cfg.modulus % 2 == 1);
            if (id == LemmaId::Lemma1 || id == LemmaId::SpanForm) {
                zn::IndexSequence head(cfg.modulus, {cfg.indices[0], cfg.indices[1], cfg.indices[2]});
                CHECK_FALSE(zn::is_minus_one_dependent(head));
                CHECK(zn::dependency_set(head).contains(zn::Residue(cfg.indices[3], cfg.modulus)));
            }
            if (id == LemmaId::Lemma2) CHECK(zn::residue_order(zn::Residue(cfg.indices[0], cfg.modulus)) > 3);
            CHECK(run_check(cfg).verdict != Verdict::HypothesisViolated);
        }
    }
}

TEST_CASE("random configs respect a small modulus bound") {
    for (long long max_n : {11LL, 15LL, 16LL}) {
        for (auto id : {LemmaId::Lemma1, LemmaId::SpanForm, LemmaId::Lemma3}) {
            if (id == LemmaId::Lemma1 && max_n < 15) continue;
            for (uint64_t seed = 0; seed < 10; ++seed) {
                CAPTURE(max_n);
                const auto cfg = random_config(id, seed, max_n);
                CHECK(cfg.modulus <= max_n);
                CHECK(cfg.modulus >= 3);
            }
        }
    }
    // Below 15 every admissible quadruple has D~ covering all nonzero b.
    CHECK_THROWS_AS(random_config(LemmaId::Lemma1, 0, 13), InputError);
}

TEST_CASE("fuzz campaigns find no counterexamples") {
    const std::vector<std::pair<LemmaId, long long>> plans{
        {LemmaId::Lemma1, 41},   {LemmaId::Lemma2, 15},         {LemmaId::Lemma3, 15},
        {LemmaId::SpanForm, 41}, {LemmaId::ComponentBound, 41}, {LemmaId::Proposition, 15}};
    for (auto [id, max_n] : plans) {
        CAPTURE(lemma_name(id));
        auto s = fuzz_campaign(id, 100, 20261016, max_n, 120);
        CHECK(s.runs == 100);
        CHECK(s.failures.empty());
        CHECK(s.verdicts[Verdict::Verified] == 100);
    }
}

TEST_CASE("plans estimate free dimensions without elimination") {
    auto l2 = config(LemmaId::Lemma2, 11, {1, 3, 2}, 15);
    auto plan = plan_check(l2);
    CHECK(plan.target == "(1,7,7)");
    CHECK(plan.target_free_dimension == 3432);
    CHECK(plan.generator_degrees == std::vector<long long>{2, 3, 9});
    // Compositions of at most 15 into 3 parts, excluding the empty one: C(18,3) - 1.
    CHECK(plan.fine_degrees == 815);

    auto l1 = config(LemmaId::Lemma1, 101, {1, 2, 5, 98}, 5, {40});
    plan = plan_check(l1);
    CHECK(plan.target_free_dimension == 24);
    CHECK(plan.generator_degrees.back() == 40);

    auto bad = config(LemmaId::Lemma1, 101, {1, 2, 5, 98}, 5, {0});
    REQUIRE(hypothesis_violation(bad).has_value());
    CHECK(*hypothesis_violation(bad) == "b = 0 lies in D~");
    CHECK_THROWS_AS(plan_check(bad), InputError);
}
