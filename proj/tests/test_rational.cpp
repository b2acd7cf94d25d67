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

#include "gradedlie/bounds.hpp"
#include "gradedlie/errors.hpp"
#include "gradedlie/rational.hpp"

using gradedlie::Rational;

TEST_CASE("rational basics") {
    Rational a(6, -4);
    CHECK(a.str() == "-3/2");
    CHECK((a + Rational(3, 2)).is_zero());
    CHECK(Rational::parse("10/4") == Rational(5, 2));
    CHECK(Rational::parse("-7").str() == "-7");
    CHECK_THROWS_AS(Rational(1, 0), gradedlie::InputError);
    CHECK_THROWS_AS(Rational::parse("1/x"), gradedlie::InputError);
}

TEST_CASE("rational overflow promotes to gmp and demotes back") {
    Rational big(INT64_MAX);
    big *= Rational(INT64_MAX);
    CHECK_FALSE(big.is_small());
    big /= Rational(INT64_MAX);
    CHECK(big.is_small());
    CHECK(big == Rational(INT64_MAX));
    Rational m(INT64_MIN);
    CHECK(m.sign() < 0);
    CHECK((-m).str() == "9223372036854775808");
}

TEST_CASE("rational arithmetic matches mpq on random inputs") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> dist(-(1LL << 40), 1LL << 40);
    for (int it = 0; it < 2000; ++it) {
        long long p = dist(rng), q = dist(rng) | 1, r = dist(rng), s = dist(rng) | 1;
        Rational x(p, q), y(r, s);
        mpq_class X(static_cast<long>(p), static_cast<long>(q)), Y(static_cast<long>(r), static_cast<long>(s));
        X.canonicalize();
        Y.canonicalize();
        CHECK((x + y).to_mpq() == X + Y);
        CHECK((x * y).to_mpq() == X * Y);
        CHECK((x - y).to_mpq() == X - Y);
        if (!y.is_zero()) CHECK((x / y).to_mpq() == X / Y);
        Rational z = x;
        z.sub_mul(y, x);
        CHECK(z.to_mpq() == X - Y * X);
    }
}

TEST_CASE("bound constants") {
    auto c = gradedlie::bound_constants(3);
    CHECK(c.dtilde_max == 625);
    CHECK(c.u_max == 2343750);
    CHECK(c.e_bound.coefficient == 3);
    CHECK(c.e_bound.base == 5);
    CHECK(c.e_bound.exponent == 4 * c.u_max);
    CHECK(c.final_length == 5);
    CHECK(gradedlie::bound_constants(1).final_length == 4);
    CHECK(gradedlie::bound_constants(7).final_length == 9);
    CHECK_THROWS_AS(gradedlie::bound_constants(0), gradedlie::InputError);
    gradedlie::SymbolicPower small{3, 5, 20};
    CHECK(small.decimal_digits() == small.exact_decimal_digits());
    CHECK(small.evaluate() == mpz_class("286102294921875"));
}
