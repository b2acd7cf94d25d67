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

#include "gradedlie/eigenspace.hpp"
#include "gradedlie/errors.hpp"

using namespace gradedlie;

namespace {

CyclotomicNumber random_number(const FieldPtr& f, std::mt19937& rng) {
    std::vector<Rational> c(f->degree());
    for (auto& x : c) x = Rational(static_cast<long long>(rng() % 11) - 5, 1 + static_cast<long long>(rng() % 4));
    return f->from_polynomial(c);
}

CycMatrix matrix(const FieldPtr& f, const std::vector<std::vector<CyclotomicNumber>>& rows) {
    CycMatrix m(f, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

SCAlgebra heisenberg(const FieldPtr& f) {
    return SCAlgebra(f, {"x", "y", "z"}, {{0, 1, 2, f->one()}});
}

// Strictly upper triangular 5x5 matrices, basis E_ij (i < j).
SCAlgebra upper_triangular(const FieldPtr& f, std::vector<std::pair<int, int>>& index) {
    std::vector<std::string> labels;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            index.push_back({i, j});
            labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
        }
    }
    std::vector<StructureConstant> sc;
    for (std::size_t a = 0; a < index.size(); ++a) {
        for (std::size_t b = 0; b < index.size(); ++b) {
            if (index[a].second != index[b].first) continue;
            for (std::size_t c = 0; c < index.size(); ++c) {
                if (index[c] == std::make_pair(index[a].first, index[b].second)) {
                    sc.push_back({a, b, c, f->one()});
                }
            }
        }
    }
    return SCAlgebra(f, labels, sc);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<long long>{-1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<long long>{1, 1, 1});
    CHECK(cyclotomic_polynomial(9) == std::vector<long long>{1, 0, 0, 1, 0, 0, 1});
    CHECK(cyclotomic_polynomial(7).size() == 7);
    auto p105 = cyclotomic_polynomial(105);
    CHECK(p105.size() == 49);
    CHECK(p105[7] == -2);
    CHECK_THROWS_AS(cyclotomic_polynomial(0), InputError);
}

TEST_CASE("cyclotomic arithmetic") {
    for (int n : {1, 3, 5, 7, 9, 15}) {
        auto f = CyclotomicField::create(n);
        auto w = f->omega_power(1);
        CyclotomicNumber p = f->one();
        for (int i = 0; i < n; ++i) p *= w;
        CHECK(p.is_one());
        CHECK(f->omega_power(-1) * w == f->one());
        std::mt19937 rng(static_cast<unsigned>(n));
        for (int it = 0; it < 30; ++it) {
            auto a = random_number(f, rng);
            auto b = random_number(f, rng);
            CHECK((a + b) * (a - b) == a * a - b * b);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
            if (!b.is_zero()) CHECK(a / b * b == a);
        }
        // Phi_n(w) = 0.
        CyclotomicNumber s = f->zero();
        auto coeffs = cyclotomic_polynomial(n);
        for (std::size_t i = 0; i < coeffs.size(); ++i) s += f->rational(Rational(coeffs[i])) * f->omega_power(static_cast<long long>(i));
        CHECK(s.is_zero());
    }
    auto f = CyclotomicField::create(3);
    CHECK_THROWS_AS(f->zero().inverse(), InputError);
    CHECK(f->omega_power(2) == f->from_polynomial({Rational(-1), Rational(-1)}));
}

TEST_CASE("structure constant validation") {
    auto f = CyclotomicField::create(3);
    CHECK_THROWS_AS(SCAlgebra(f, {"x", "y"}, {{0, 0, 1, f->one()}}), InputError);
    CHECK_THROWS_AS(SCAlgebra(f, {"x", "y", "z"}, {{0, 1, 2, f->one()}, {1, 0, 2, f->one()}}), InputError);
    CHECK_NOTHROW(SCAlgebra(f, {"x", "y", "z"}, {{0, 1, 2, f->one()}, {1, 0, 2, -f->one()}}));
    CHECK_THROWS_AS(SCAlgebra(f, {"x", "x"}, {}), InputError);
    // [x,y]=x, [y,z]=y, [z,x]=z breaks Jacobi.
    CHECK_THROWS_AS(SCAlgebra(f, {"x", "y", "z"}, {{0, 1, 0, f->one()}, {1, 2, 1, f->one()}, {2, 0, 2, f->one()}}),
                    InputError);
}

TEST_CASE("abelian example with a dihedral pair") {
    auto f = CyclotomicField::create(3);
    SCAlgebra alg(f, {"e1", "e2"}, {});
    AutomorphismPair aut{CycMatrix::diagonal(f, {f->omega_power(1), f->omega_power(2)}),
                         matrix(f, {{f->zero(), f->one()}, {f->one(), f->zero()}}), 3};
    CHECK(verify_automorphism_pair(alg, aut).passed());
    CHECK(verify_hypotheses(alg, aut).passed());
    auto g = eigenspace_decomposition(alg, aut);
    CHECK(g.dimension(0) == 0);
    CHECK(g.dimension(1) == 1);
    CHECK(g.dimension(2) == 1);
    CHECK_FALSE(verify_selective_condition(alg, g).has_value());
    CHECK(fixed_subalgebra(alg, aut.phi).empty());
    auto fh = fixed_subalgebra(alg, *aut.h);
    REQUIRE(fh.size() == 1);
    CHECK(fh[0][0] == fh[0][1]);
    CHECK(fixed_subalgebra(alg, CycMatrix::identity(f, 2)).size() == 2);

    AutomorphismPair trivial{CycMatrix::identity(f, 2), aut.h, 3};
    auto r = verify_automorphism_pair(alg, trivial);
    CHECK_FALSE(r.find("phi has order n")->passed);
}

TEST_CASE("heisenberg grading") {
    auto f = CyclotomicField::create(5);
    auto alg = heisenberg(f);
    AutomorphismPair aut{CycMatrix::diagonal(f, {f->omega_power(1), f->omega_power(1), f->omega_power(2)}), {}, 5};
    CHECK(verify_automorphism_pair(alg, aut).passed());
    auto g = eigenspace_decomposition(alg, aut);
    CHECK(g.dimension(1) == 2);
    CHECK(g.dimension(2) == 1);
    CHECK(g.dimension(0) + g.dimension(3) + g.dimension(4) == 0);
    CHECK(vector_rank({g.components[1][0], g.components[1][1], alg.unit(0)}, f) == 2);
    CHECK(vector_rank({g.components[1][0], g.components[1][1], alg.unit(1)}, f) == 2);
    CHECK(vector_rank({g.components[2][0], alg.unit(2)}, f) == 1);
    CHECK_THROWS_AS(verify_hypotheses(alg, aut), InputError);
}

TEST_CASE("heisenberg with a fixed centre fails the hypotheses") {
    auto f = CyclotomicField::create(3);
    auto alg = heisenberg(f);
    auto z0 = f->zero(), one = f->one();
    AutomorphismPair aut{CycMatrix::diagonal(f, {f->omega_power(1), f->omega_power(-1), one}),
                         matrix(f, {{z0, one, z0}, {one, z0, z0}, {z0, z0, -one}}), 3};
    CHECK(verify_automorphism_pair(alg, aut).passed());
    auto h = verify_hypotheses(alg, aut);
    CHECK_FALSE(h.find("fixed points of F are trivial")->passed);
    CHECK(h.find("fixed points of F are trivial")->witness == "(1)*z");
    auto g = eigenspace_decomposition(alg, aut);
    CHECK(g.dimension(0) == 1);
    CHECK(g.dimension(1) == g.dimension(-1));

    AutomorphismPair bad{aut.phi, matrix(f, {{z0, one, z0}, {one, z0, z0}, {z0, z0, one}}), 3};
    auto r = verify_automorphism_pair(alg, bad);
    CHECK_FALSE(r.find("h preserves bracket")->passed);
    CHECK(r.find("h preserves bracket")->witness == "(0, 1)");
}

TEST_CASE("upper triangular matrices violate the selective condition") {
    auto f = CyclotomicField::create(7);
    std::vector<std::pair<int, int>> index;
    auto alg = upper_triangular(f, index);
    CycVector diag;
    for (auto [i, j] : index) diag.push_back(f->omega_power(j - i));
    AutomorphismPair aut{CycMatrix::diagonal(f, diag), {}, 7};
    CHECK(verify_automorphism_pair(alg, aut).passed());
    auto g = eigenspace_decomposition(alg, aut);
    CHECK(g.dimension(1) == 4);
    auto v = verify_selective_condition(alg, g);
    REQUIRE(v.has_value());
    CHECK(v->degrees == std::array<int, 4>{1, 1, 1, 1});
}

TEST_CASE("dimension mismatch is invalid input") {
    auto f = CyclotomicField::create(3);
    auto alg = heisenberg(f);
    AutomorphismPair aut{CycMatrix::identity(f, 2), {}, 3};
    CHECK_THROWS_AS(verify_automorphism_pair(alg, aut), InputError);
    CHECK_THROWS_AS(eigenspace_decomposition(alg, aut), InputError);
}
