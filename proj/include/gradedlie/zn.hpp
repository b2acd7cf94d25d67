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
// Arithmetic and (-1)-dependence combinatorics on indices in Z/nZ.

#ifndef GRADEDLIE_ZN_HPP
#define GRADEDLIE_ZN_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace gradedlie::zn {

// Throws InputError unless n is odd and at least 3.
void require_odd_modulus(long long n);

/* An element of Z/nZ for odd n >= 3, stored as its least nonnegative
 * representative. */
class Residue {
public:
    Residue(long long value, long long modulus);

    int value() const noexcept { return value_; }
    int modulus() const noexcept { return modulus_; }
    // Representative in (-n/2, n/2); only used for reports.
    int signed_value() const noexcept { return value_ > modulus_ / 2 ? value_ - modulus_ : value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    Residue operator+(const Residue& rhs) const;
    Residue operator-(const Residue& rhs) const;
    Residue operator-() const;
    Residue operator*(long long k) const;

    friend bool operator==(const Residue&, const Residue&) = default;
    friend auto operator<=>(const Residue&, const Residue&) = default;

private:
    Residue(int value, int modulus, std::nullptr_t) : value_(value), modulus_(modulus) {}
    int value_;
    int modulus_;
};

using ResidueSet = std::set<Residue>;

/* A nonempty sequence of residues sharing one modulus. */
class IndexSequence {
public:
    IndexSequence(long long modulus, const std::vector<long long>& values);
    explicit IndexSequence(std::vector<Residue> entries);

    int modulus() const noexcept { return modulus_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::span<const Residue> entries() const noexcept { return entries_; }
    const Residue& operator[](std::size_t i) const { return entries_[i]; }
    std::vector<int> values() const;
    bool all_nonzero() const;
    IndexSequence appended(const Residue& r) const;
    std::string str() const;

private:
    int modulus_;
    std::vector<Residue> entries_;
};

// Additive order n / gcd(n, a).
int residue_order(const Residue& a);

// True iff some nonzero 0/1 combination of the entries vanishes mod n.
bool is_minus_one_dependent(const IndexSequence& seq);

/* Residues j for which seq followed by j is (-1)-dependent. Defined only for
 * (-1)-independent seq; throws InputError otherwise. Contains 0. */
ResidueSet dependency_set(const IndexSequence& seq);

// All combinations sum u_i b_i with u_i in {0, +-1, +-2}.
ResidueSet dtilde_set(const IndexSequence& seq);

// Raw-integer form of is_minus_one_dependent for hot loops; values are
// taken mod `modulus` and need not be reduced.
bool minus_one_dependent(std::span<const int> values, int modulus);

}  // namespace gradedlie::zn

#endif  // GRADEDLIE_ZN_HPP
