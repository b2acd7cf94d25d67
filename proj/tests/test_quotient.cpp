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

#include <random>

#include "gradedlie/errors.hpp"
#include "gradedlie/quotient.hpp"

using namespace gradedlie;

namespace {

// Oracle: the ideal slice at key built from the literal relator list, closed
// by bracketing with generators, without any of the engine's shortcuts.
std::map<FineDegree, RowSpace> literal_ideal(QuotientAlgebra& q, const FineDegree& key) {
    FreeLieAlgebra& f = q.free_algebra();
    const std::size_t rank = q.presentation().generators().size();
    std::map<FineDegree, RowSpace> out;
    auto relators = q.instantiate_relators(key);
    for (const FineDegree& k : sub_degrees(key)) {
        RowSpace r(f.dimension(k));
        for (const auto& e : relators) {
            if (*e.fine_degree(rank) == k) r.insert(f.coordinates(e, k));
        }
        for (std::size_t g = 0; g < rank; ++g) {
            if (k[g] == 0 || k.length() < 2) continue;
            FineDegree prev = k - FineDegree::unit(rank, g);
            for (const auto& row : out.at(prev).basis()) {
                r.insert(f.bracket(prev, row, FineDegree::unit(rank, g), unit_vector(0)));
            }
        }
        out.emplace(k, std::move(r));
    }
    return out;
}

void compare_with_literal(const GradedPresentation& p, const FineDegree& key) {
    QuotientAlgebra engine(p);
    QuotientAlgebra literal_source(p);
    auto lit = literal_ideal(literal_source, key);
    for (const auto& [k, rows] : lit) {
        auto c = engine.component(k);
        INFO("fine degree " << k.str(p.generators()));
        REQUIRE(c.relations.rank() == rows.rank());
        for (const auto& v : rows.basis()) REQUIRE(c.relations.contains(v));
    }
}

GradedPresentation presentation(long long n, std::vector<long long> degrees, std::vector<RelatorFamily> fam,
                                int cutoff) {
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < degrees.size(); ++i) gens.push_back({std::string(1, static_cast<char>('a' + i)), degrees[i]});
    return GradedPresentation(n, gens, std::move(fam), cutoff);
}

}  // namespace

TEST_CASE("relator instantiation examples") {
    auto p = presentation(3, {1, 2}, {RelatorFamily::zero_component_kill()}, 4);
    QuotientAlgebra q(p);
    auto rel = q.instantiate_relators(FineDegree({1, 1}));
    REQUIRE(rel.size() == 1);
    auto& f = q.free_algebra();
    CHECK(rel[0] == f.bracket(f.generator("a"), f.generator("b")));
    CHECK(q.quotient_dimension(FineDegree({1, 1})) == 0);
    CHECK(q.is_zero(rel[0]));

    // (1,2,3,1) sums to 7, so it is dependent mod 7 and [[a,b],[c,a]] is not a relator.
    auto sm = presentation(7, {1, 2, 3}, {RelatorFamily::selective_metabelian()}, 5);
    QuotientAlgebra qs(sm);
    auto& fs = qs.free_algebra();
    auto a = fs.generator("a"), b = fs.generator("b"), c = fs.generator("c");
    auto r = fs.bracket(fs.bracket(a, b), fs.bracket(c, a));
    auto list = qs.instantiate_relators(FineDegree({2, 1, 1}));
    CHECK(list.empty());
    CHECK_FALSE(qs.is_zero(r));

    // (1,2,1,2) mod 7 is independent.
    auto sm2 = presentation(7, {1, 1, 2}, {RelatorFamily::selective_metabelian()}, 5);
    QuotientAlgebra q2(sm2);
    auto& f2 = q2.free_algebra();
    auto r2 = f2.bracket(f2.bracket(f2.generator("a"), f2.generator("c")),
                         f2.bracket(f2.generator("b"), f2.generator("c")));
    auto list2 = q2.instantiate_relators(FineDegree({1, 1, 2}));
    CHECK(std::find(list2.begin(), list2.end(), r2) != list2.end());
    CHECK(q2.is_zero(r2));
}

TEST_CASE("selective relators skip dependent quadruples") {
    // Degrees 1 and 6 = -1 mod 7: any quadruple holding both is dependent.
    auto p = presentation(7, {1, 6}, {RelatorFamily::selective_metabelian()}, 4);
    QuotientAlgebra q(p);
    CHECK(q.instantiate_relators(FineDegree({2, 2})).empty());
    CHECK(q.instantiate_relators(FineDegree({4, 0})).empty());
}

TEST_CASE("free presentation has no relations") {
    auto p = presentation(5, {1, 2}, {}, 6);
    QuotientAlgebra q(p);
    for (const auto& k : q.fine_degrees_up_to(6)) CHECK(q.component(k).relations.rank() == 0);
    auto& f = q.free_algebra();
    CHECK_FALSE(q.is_zero(f.bracket(f.generator("a"), f.generator("b"))));
}

TEST_CASE("engine ideal equals the literal relator closure") {
    compare_with_literal(presentation(7, {1, 2, 3}, {RelatorFamily::selective_metabelian()}, 6), FineDegree({2, 2, 2}));
    compare_with_literal(presentation(7, {1, 2, 3},
                                      {RelatorFamily::zero_component_kill(), RelatorFamily::selective_metabelian()}, 6),
                         FineDegree({2, 2, 2}));
    compare_with_literal(presentation(7, {1, 2, 3}, {RelatorFamily::zero_component_kill(), RelatorFamily::select_second()},
                                      6),
                         FineDegree({2, 2, 1}));
    compare_with_literal(presentation(5, {1, 2}, {RelatorFamily::zero_component_kill(), RelatorFamily::select_second()}, 6),
                         FineDegree({3, 3}));
    compare_with_literal(presentation(11, {2, 3, 9},
                                      {RelatorFamily::zero_component_kill(), RelatorFamily::selective_metabelian()}, 7),
                         FineDegree({1, 3, 3}));
    compare_with_literal(presentation(13, {1, 3, 4},
                                      {RelatorFamily::selective_metabelian(), RelatorFamily::select_second()}, 6),
                         FineDegree({2, 2, 2}));
}

TEST_CASE("random presentations agree with the literal closure") {
    std::mt19937 rng(17);
    for (int it = 0; it < 12; ++it) {
        int n = 5 + 2 * static_cast<int>(rng() % 4);
        std::vector<long long> degs;
        for (int i = 0; i < 3; ++i) degs.push_back(1 + static_cast<long long>(rng() % (n - 1)));
        std::vector<RelatorFamily> fam;
        if (rng() % 2) fam.push_back(RelatorFamily::zero_component_kill());
        fam.push_back(rng() % 2 ? RelatorFamily::selective_metabelian() : RelatorFamily::select_second());
        compare_with_literal(presentation(n, degs, fam, 6), FineDegree({2, 2, 1}));
    }
}

TEST_CASE("explicit relators and validation") {
    GradedPresentation base = presentation(5, {1, 2}, {}, 5);
    QuotientAlgebra tmp(base);
    auto& f = tmp.free_algebra();
    auto ab = f.bracket(f.generator("a"), f.generator("b"));
    auto p = base.with_families({RelatorFamily::explicit_list({ab})});
    QuotientAlgebra q(p);
    auto& g = q.free_algebra();
    CHECK(q.is_zero(ab));
    CHECK(q.is_zero(g.bracket(ab, g.generator("a"))));
    CHECK(q.quotient_dimension(FineDegree({2, 1})) == 0);
    CHECK_THROWS_AS(base.with_families({RelatorFamily::explicit_list({ab + f.generator("a")})}), InputError);
    CHECK_THROWS_AS(presentation(4, {1}, {}, 3), InputError);
    CHECK_THROWS_AS(presentation(5, {5}, {RelatorFamily::zero_component_kill()}, 3), InputError);
    CHECK_THROWS_AS(q.is_zero(ab + g.generator("a")), InputError);
    CHECK_THROWS_AS(q.component(FineDegree({5, 1})), InputError);
}

TEST_CASE("zero component is killed") {
    auto p = presentation(7, {1, 2, 3}, {RelatorFamily::zero_component_kill(), RelatorFamily::selective_metabelian()}, 6);
    QuotientAlgebra q(p);
    for (const auto& k : q.fine_degrees_up_to(6)) {
        if (k.zn_degree(p.generators()) == 0) CHECK(q.quotient_dimension(k) == 0);
    }
}

TEST_CASE("is_zero is stable under raising the cutoff") {
    auto p = presentation(7, {1, 2, 3}, {RelatorFamily::selective_metabelian()}, 5);
    QuotientAlgebra lo(p), hi(p.with_cutoff(7));
    std::mt19937 rng(4);
    for (const auto& k : lo.fine_degrees_up_to(5)) {
        auto basis = lo.free_algebra().hall_basis(k);
        for (const auto& m : basis) {
            LieElement e(m, Rational(static_cast<long long>(rng() % 5) + 1));
            if (!basis.empty()) e.add_term(basis.front(), Rational(2));
            CHECK(lo.is_zero(e) == hi.is_zero(e));
            CHECK(lo.reduce(lo.reduce(e)) == lo.reduce(e));
            CHECK(lo.is_zero(e) == lo.reduce(e).is_zero());
        }
    }
}

TEST_CASE("grading law on the quotient") {
    auto p = presentation(7, {1, 2, 3}, {RelatorFamily::zero_component_kill(), RelatorFamily::select_second()}, 6);
    QuotientAlgebra q(p);
    for (const auto& a : q.fine_degrees_up_to(3)) {
        for (const auto& b : q.fine_degrees_up_to(3)) {
            auto ca = q.component(a), cb = q.component(b);
            for (uint32_t i : ca.quotient_basis) {
                for (uint32_t j : cb.quotient_basis) {
                    auto v = q.bracket(a, unit_vector(i), b, unit_vector(j));
                    if (v.empty()) continue;
                    auto e = q.free_algebra().element(a + b, v);
                    CHECK(e.fine_degree(3)->zn_degree(p.generators()) ==
                          (a.zn_degree(p.generators()) + b.zn_degree(p.generators())) % 7);
                }
            }
        }
    }
}

TEST_CASE("ideal generated") {
    auto p = presentation(7, {1, 2, 3}, {}, 4);
    QuotientAlgebra q(p);
    CHECK(q.ideal_generated({}, Ambient::Whole).is_zero());
    auto snap = q.ideal_generated({q.free_algebra().generator("a")}, Ambient::Whole);
    for (const auto& k : q.fine_degrees_up_to(4)) {
        std::size_t expected = k[0] > 0 ? q.quotient_dimension(k) : 0;
        CHECK(snap.dimension(k) == expected);
    }
    // Inside [L, L] the ideal generated by b starts at length 3: [b, [a, c]] but not [[a, b], c].
    auto whole = q.ideal_generated({q.free_algebra().generator("b")}, Ambient::Whole);
    auto inner = q.ideal_generated({q.free_algebra().generator("b")}, Ambient::Derived);
    CHECK(whole.dimension(FineDegree({1, 1, 0})) == 1);
    CHECK(inner.dimension(FineDegree({1, 1, 0})) == 0);
    CHECK(whole.dimension(FineDegree({1, 1, 1})) == 2);
    CHECK(inner.dimension(FineDegree({1, 1, 1})) == 1);
    auto bac = q.free_algebra().bracket(q.free_algebra().generator("b"),
                                        q.free_algebra().bracket(q.free_algebra().generator("a"),
                                                                 q.free_algebra().generator("c")));
    CHECK(inner.components.at(FineDegree({1, 1, 1})).contains(q.free_algebra().coordinates(bac, FineDegree({1, 1, 1}))));
}

TEST_CASE("derived series and derived length") {
    auto one = presentation(5, {1}, {}, 6);
    QuotientAlgebra q1(one);
    CHECK(q1.derived_length().length == 1);

    auto free2 = presentation(5, {1, 2}, {}, 3);
    QuotientAlgebra q2(free2);
    auto series = q2.derived_series(2);
    CHECK_FALSE(series[0].is_zero());
    CHECK(series[1].is_zero());

    QuotientAlgebra q7(presentation(5, {1, 2}, {}, 7));
    auto dl = q7.derived_length();
    CHECK(dl.length == 3);
    CHECK(dl.vacuity_threshold == 3);
    CHECK_FALSE(dl.informative());

    QuotientAlgebra empty(GradedPresentation(5, {}, {}, 4));
    CHECK(empty.derived_length().length == 0);
}

TEST_CASE("derived series is nested") {
    auto p = presentation(7, {1, 2, 3}, {RelatorFamily::selective_metabelian()}, 8);
    QuotientAlgebra q(p);
    auto series = q.derived_series(3);
    for (std::size_t i = 1; i < series.size(); ++i) {
        for (const auto& [k, rows] : series[i].components) {
            auto it = series[i - 1].components.find(k);
            REQUIRE(it != series[i - 1].components.end());
            for (const auto& v : rows.basis()) CHECK(it->second.contains(v));
        }
    }
}

TEST_CASE("centralizer census") {
    auto p = presentation(5, {1}, {}, 5);
    QuotientAlgebra q(p);
    auto t = q.ideal_generated({q.free_algebra().generator("a")}, Ambient::Whole);
    auto c = q.centralizer_census(t);
    CHECK(c.nontrivial == std::set<int>{1});
    CHECK(c.noncentralizing.empty());
    CHECK(q.centralizer_census(IdealSnapshot{}).nontrivial.empty());

    auto p2 = presentation(7, {1, 2}, {}, 4);
    QuotientAlgebra q2(p2);
    auto t2 = q2.ideal_generated({q2.free_algebra().generator("b")}, Ambient::Whole);
    auto c2 = q2.centralizer_census(t2);
    CHECK(c2.noncentralizing.size() <= c2.nontrivial.size() * c2.nontrivial.size());
    CHECK(c2.noncentralizing.count(1));
}
