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

#include <algorithm>
#include <random>

#include "gradedlie/errors.hpp"
#include "gradedlie/zn.hpp"

namespace zn = gradedlie::zn;

namespace {

// Independent oracle: recursive search over 0/1 choices, tracking "picked anything".
bool oracle_dependent(const std::vector<int>& v, int n, std::size_t i = 0, int sum = 0, bool picked = false) {
    if (i == v.size()) return picked && sum % n == 0;
    return oracle_dependent(v, n, i + 1, sum, picked) || oracle_dependent(v, n, i + 1, (sum + v[i]) % n, true);
}

std::set<int> values_of(const zn::ResidueSet& s) {
    std::set<int> out;
    for (const auto& r : s) out.insert(r.value());
    return out;
}

}  // namespace

TEST_CASE("residue order") {
    CHECK(zn::residue_order(zn::Residue(3, 9)) == 3);
    CHECK(zn::residue_order(zn::Residue(2, 7)) == 7);
    CHECK(zn::residue_order(zn::Residue(10, 15)) == 3);
    CHECK(zn::residue_order(zn::Residue(0, 15)) == 1);
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(zn::Residue(1, 4), gradedlie::InputError);
    CHECK_THROWS_AS(zn::Residue(1, 1), gradedlie::InputError);
    CHECK(zn::Residue(-1, 7).value() == 6);
    CHECK_THROWS_AS(zn::IndexSequence(7, std::vector<long long>{}), gradedlie::InputError);
}

TEST_CASE("dependence examples") {
    CHECK(zn::is_minus_one_dependent(zn::IndexSequence(7, {1, 2, 4})));
    CHECK_FALSE(zn::is_minus_one_dependent(zn::IndexSequence(7, {1, 2, 3})));
    CHECK_FALSE(zn::is_minus_one_dependent(zn::IndexSequence(5, {3})));
    CHECK(values_of(zn::dependency_set(zn::IndexSequence(5, {1, 2}))) == std::set<int>{0, 2, 3, 4});
    CHECK(values_of(zn::dependency_set(zn::IndexSequence(11, {1, 2, 5}))) ==
          std::set<int>{0, 10, 9, 6, 8, 5, 4, 3});
    CHECK_THROWS_AS(zn::dependency_set(zn::IndexSequence(7, {1, 2, 4})), gradedlie::InputError);
    CHECK(values_of(zn::dtilde_set(zn::IndexSequence(101, {1}))) == std::set<int>{0, 1, 2, 99, 100});
    CHECK(zn::dtilde_set(zn::IndexSequence(7, {1, 2})).size() == 7);
}

TEST_CASE("dependence agrees with the recursive oracle for small n") {
    for (int n = 3; n <= 15; n += 2) {
        for (int k = 1; k <= 4; ++k) {
            std::vector<int> v(k, 1);
            while (true) {
                std::vector<long long> ll(v.begin(), v.end());
                zn::IndexSequence seq(n, ll);
                bool dep = zn::is_minus_one_dependent(seq);
                REQUIRE(dep == oracle_dependent(v, n));
                if (!dep) {
                    // D(seq) by appending each j, versus negated subset sums.
                    std::set<int> by_append;
                    for (int j = 0; j < n; ++j) {
                        auto w = v;
                        w.push_back(j);
                        if (oracle_dependent(w, n)) by_append.insert(j);
                    }
                    std::set<int> negated;
                    for (int mask = 0; mask < (1 << k); ++mask) {
                        int s = 0;
                        for (int i = 0; i < k; ++i) {
                            if (mask >> i & 1) s += v[i];
                        }
                        negated.insert(((-s) % n + n) % n);
                    }
                    auto d = values_of(zn::dependency_set(seq));
                    REQUIRE(d == by_append);
                    REQUIRE(d == negated);
                    auto dt = values_of(zn::dtilde_set(seq));
                    REQUIRE(std::includes(dt.begin(), dt.end(), d.begin(), d.end()));
                }
                int i = 0;
                while (i < k && ++v[i] == n) v[i++] = 1;
                if (i == k) break;
            }
        }
    }
}

TEST_CASE("dependence is permutation invariant and monotone") {
    std::mt19937 rng(3);
    for (int it = 0; it < 500; ++it) {
        int n = 3 + 2 * static_cast<int>(rng() % 20);
        int k = 1 + static_cast<int>(rng() % 6);
        std::vector<long long> v(k);
        for (auto& x : v) x = 1 + static_cast<long long>(rng() % (n - 1));
        bool dep = zn::is_minus_one_dependent(zn::IndexSequence(n, v));
        auto p = v;
        std::shuffle(p.begin(), p.end(), rng);
        CHECK(dep == zn::is_minus_one_dependent(zn::IndexSequence(n, p)));
        if (dep) {
            p.push_back(1 + static_cast<long long>(rng() % (n - 1)));
            CHECK(zn::is_minus_one_dependent(zn::IndexSequence(n, p)));
        }
        auto neg = v;
        neg[0] = n - neg[0];
        CHECK(zn::dtilde_set(zn::IndexSequence(n, v)) == zn::dtilde_set(zn::IndexSequence(n, neg)));
        auto q = v;
        std::shuffle(q.begin(), q.end(), rng);
        CHECK(zn::dtilde_set(zn::IndexSequence(n, v)) == zn::dtilde_set(zn::IndexSequence(n, q)));
    }
}
